// Copyright 2026 The panobench authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "panobench/correlation.hpp"
#include "panobench/errors.hpp"

namespace panobench {

/// Relative performance change in percent: (p_test - p_ori) / p_ori * 100.
/// Undefined (nullopt) when the baseline is zero.
inline std::optional<double> gap_percent(double p_ori, double p_test) {
  if (p_ori == 0.0) return std::nullopt;
  return (p_test - p_ori) / p_ori * 100.0;
}

/// One transfer cell: a model's baseline performance against its performance
/// on a new database, under one metric.
struct GapRecord {
  std::string model;
  std::string database;
  Metric metric = Metric::Plcc;
  double p_ori = 0.0;
  double p_test = 0.0;
  std::optional<double> gap;

  static GapRecord make(std::string model, std::string database, Metric metric, double p_ori,
                        double p_test) {
    GapRecord r{std::move(model), std::move(database), metric, p_ori, p_test, std::nullopt};
    r.gap = gap_percent(p_ori, p_test);
    return r;
  }
};

/// Arithmetic mean over the defined gaps; nullopt when none are defined.
inline std::optional<double> mean_gap(const std::vector<GapRecord>& records) {
  double sum = 0.0;
  int n = 0;
  for (const GapRecord& r : records) {
    if (!r.gap) continue;
    sum += *r.gap;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

enum class SaturationStatus { Saturated, Intermediate, Undersaturated };

inline const char* saturation_name(SaturationStatus s) {
  switch (s) {
    case SaturationStatus::Saturated: return "saturated";
    case SaturationStatus::Intermediate: return "intermediate";
    case SaturationStatus::Undersaturated: return "undersaturated";
  }
  return "?";
}

/// Saturated when min(plcc, srcc) >= 0.96 (boundary inclusive),
/// undersaturated below 0.85, intermediate between.
inline SaturationStatus classify_saturation(double plcc, double srcc) {
  if (std::isnan(plcc) || std::isnan(srcc))
    throw NumericError("classify_saturation: undefined correlation");
  const double lo = std::min(plcc, srcc);
  if (lo >= 0.96) return SaturationStatus::Saturated;
  if (lo < 0.85) return SaturationStatus::Undersaturated;
  return SaturationStatus::Intermediate;
}

inline SaturationStatus classify_saturation(const EvalReport& rep) {
  return classify_saturation(rep.plcc, rep.srcc);
}

enum class RankDirection {
  HigherBetter,          // rank 1 = largest value
  LowerMagnitudeBetter,  // rank 1 = smallest |value|
};

struct RankedValue {
  std::string name;
  double value = 0.0;
};

/// Dense ranks 1..n in the given direction; exact ties share the better rank.
/// Undefined values are an error naming the offending entry.
inline std::vector<int> rank_from_metric(const std::vector<RankedValue>& values,
                                         RankDirection direction) {
  const std::size_t n = values.size();
  if (n == 0) throw ConfigError("rank_from_metric: empty value list");
  for (const RankedValue& v : values)
    if (std::isnan(v.value))
      throw NumericError("rank_from_metric: undefined value for '" + v.name + "'");

  auto keyed = [&](std::size_t i) {
    const double v = values[i].value;
    return direction == RankDirection::HigherBetter ? -v : std::abs(v);
  };
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keyed(a) < keyed(b); });

  std::vector<int> ranks(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && keyed(order[k]) == keyed(order[k - 1]))
      ranks[order[k]] = ranks[order[k - 1]];  // ties share the better rank
    else
      ranks[order[k]] = static_cast<int>(k) + 1;
  }
  return ranks;
}

/// Names sorted best rank first (used for reporting orderings).
inline std::vector<std::string> order_by_rank(const std::vector<RankedValue>& values,
                                              RankDirection direction) {
  const std::vector<int> ranks = rank_from_metric(values, direction);
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    return values[a].name < values[b].name;
  });
  std::vector<std::string> names;
  names.reserve(values.size());
  for (std::size_t i : order) names.push_back(values[i].name);
  return names;
}

/// Per-perspective ranks and their aggregate for a set of databases.
struct RankTable {
  std::vector<std::string> databases;
  // perspective columns, each a permutation of 1..n
  std::vector<std::vector<int>> per_perspective;
  std::vector<int> final_rank;
};

namespace detail {

inline void require_permutation(const std::vector<int>& ranks, const char* who) {
  std::vector<int> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument(std::string(who) + ": rank vector is not a permutation of 1.." +
                                  std::to_string(sorted.size()));
}

}  // namespace detail

/// Final rank = rank of the arithmetic mean of the per-perspective ranks.
/// Mean ties break toward the better single-perspective rank, then by name.
inline std::vector<int> aggregate_ranks(const std::vector<std::vector<int>>& perspectives,
                                        const std::vector<std::string>& names) {
  if (perspectives.empty()) throw std::invalid_argument("aggregate_ranks: no perspectives");
  const std::size_t n = names.size();
  for (const std::vector<int>& p : perspectives) {
    if (p.size() != n)
      throw std::invalid_argument("aggregate_ranks: perspective length mismatch");
    detail::require_permutation(p, "aggregate_ranks");
  }

  std::vector<double> mean(n, 0.0);
  std::vector<int> best(n, 1 << 30);
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::vector<int>& p : perspectives) {
      mean[i] += p[i];
      best[i] = std::min(best[i], p[i]);
    }
    mean[i] /= static_cast<double>(perspectives.size());
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (mean[a] != mean[b]) return mean[a] < mean[b];
    if (best[a] != best[b]) return best[a] < best[b];
    return names[a] < names[b];
  });
  std::vector<int> final_rank(n);
  for (std::size_t k = 0; k < n; ++k) final_rank[order[k]] = static_cast<int>(k) + 1;
  return final_rank;
}

/// Cross-database gain matrix for one source database: per (model, target,
/// metric) the trained baseline, the transfer performance and the gain, plus
/// the per-target mean over models with defined gain.
struct CrossMatrix {
  struct Cell {
    double p_ori = 0.0;
    double p_test = 0.0;
    std::optional<double> gain;
  };
  std::string source_database;
  std::vector<std::string> models;
  std::vector<std::string> targets;
  std::map<std::tuple<std::string, std::string, Metric>, Cell> cells;
  std::map<std::pair<std::string, Metric>, double> mean_gain;

  void insert(const std::string& model, const std::string& target, Metric metric,
              double p_ori, double p_test) {
    Cell c{p_ori, p_test, gap_percent(p_ori, p_test)};
    cells[{model, target, metric}] = c;
  }

  void finalize_means() {
    mean_gain.clear();
    for (const std::string& t : targets) {
      for (Metric metric : {Metric::Plcc, Metric::Srcc}) {
        double sum = 0.0;
        int n = 0;
        for (const std::string& m : models) {
          const auto it = cells.find({m, t, metric});
          if (it == cells.end() || !it->second.gain) continue;
          sum += *it->second.gain;
          ++n;
        }
        if (n > 0) mean_gain[{t, metric}] = sum / n;
      }
    }
  }
};

}  // namespace panobench
