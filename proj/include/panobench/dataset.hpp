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

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "panobench/errors.hpp"
#include "panobench/rng.hpp"

namespace panobench {

enum class Split { Train, Test };

/// One image's predicted score paired with ground truth and metadata.
struct QualityRecord {
  std::string image_id;
  double predicted = std::numeric_limits<double>::quiet_NaN();
  double mos = 0.0;
  std::optional<double> mos2;
  std::optional<Split> split;
  std::string database;
  std::string distortion_tag;
  std::string note;
};

/// Averages the two MOS ratings into one and clears the second; a provenance
/// note is appended to the record.
inline QualityRecord merge_dual_mos(QualityRecord rec) {
  if (!rec.mos2.has_value())
    throw std::invalid_argument("merge_dual_mos: record '" + rec.image_id +
                                "' has no second MOS");
  rec.mos = (rec.mos + *rec.mos2) / 2.0;
  rec.mos2.reset();
  if (!rec.note.empty()) rec.note += "; ";
  rec.note += "mos merged from dual ratings";
  return rec;
}

namespace detail {

/// Fisher-Yates with the toolkit generator; std::shuffle draws an
/// implementation-defined sequence and would not reproduce across toolchains.
inline std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  Rng rng(mix_seed(seed, 0x73706c6974ULL));
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

}  // namespace detail

/// Seeded uniform random partition with exactly round(ratio * n) training
/// records. With by_content set, records sharing a content key move together
/// (key: the record's database-relative source, passed by the caller).
inline void split_dataset(std::vector<QualityRecord>& records, double ratio,
                          std::uint64_t seed,
                          const std::vector<std::string>* content_keys = nullptr) {
  const std::size_t n = records.size();
  if (n < 5) throw ConfigError("split_dataset: needs at least 5 records");
  if (!(ratio > 0.0 && ratio < 1.0)) throw ConfigError("split_dataset: ratio must be in (0,1)");

  if (content_keys == nullptr) {
    const std::size_t train_n =
        static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
    const std::vector<std::size_t> order = detail::shuffled_indices(n, seed);
    for (std::size_t k = 0; k < n; ++k)
      records[order[k]].split = k < train_n ? Split::Train : Split::Test;
    return;
  }

  if (content_keys->size() != n)
    throw ConfigError("split_dataset: content key list does not match records");
  std::vector<std::string> groups;
  for (const std::string& key : *content_keys)
    if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
  const std::size_t g = groups.size();
  if (g < 2) throw ConfigError("split_dataset: content grouping needs at least 2 groups");
  const std::size_t train_g =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(ratio * g)));
  const std::vector<std::size_t> order = detail::shuffled_indices(g, seed);
  std::vector<bool> train_group(g, false);
  for (std::size_t k = 0; k < train_g && k < g; ++k) train_group[order[k]] = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::find(groups.begin(), groups.end(), (*content_keys)[i]);
    records[i].split =
        train_group[static_cast<std::size_t>(it - groups.begin())] ? Split::Train : Split::Test;
  }
}

}  // namespace panobench
