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
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "panobench/analysis.hpp"
#include "panobench/correlation.hpp"
#include "panobench/dataset.hpp"

namespace panobench {

inline nlohmann::json record_to_json(const QualityRecord& r) {
  nlohmann::json j;
  j["image_id"] = r.image_id;
  j["predicted"] = r.predicted;
  j["mos"] = r.mos;
  if (r.mos2) j["mos2"] = *r.mos2;
  if (r.split) j["split"] = *r.split == Split::Train ? "train" : "test";
  j["database"] = r.database;
  if (!r.distortion_tag.empty()) j["distortion"] = r.distortion_tag;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline QualityRecord record_from_json(const nlohmann::json& j) {
  QualityRecord r;
  r.image_id = j.value("image_id", std::string());
  r.predicted = j.value("predicted", std::numeric_limits<double>::quiet_NaN());
  r.mos = j.at("mos").get<double>();
  if (j.contains("mos2")) r.mos2 = j["mos2"].get<double>();
  if (j.contains("split")) r.split = j["split"] == "train" ? Split::Train : Split::Test;
  r.database = j.value("database", std::string());
  r.distortion_tag = j.value("distortion", std::string());
  r.note = j.value("note", std::string());
  return r;
}

/// Correlations print with 3 decimals, matching the usual table formatting.
inline std::string format_corr(double v) {
  if (std::isnan(v)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

/// Gap/gain percentages print with one decimal and an explicit sign.
inline std::string format_percent(double v) {
  if (std::isnan(v)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%+.1f%%", v);
  return buf;
}

inline nlohmann::json eval_report_to_json(const EvalReport& rep) {
  nlohmann::json j;
  j["plcc"] = rep.plcc;
  j["srcc"] = rep.srcc;
  j["n"] = rep.n;
  j["logistic_params"] = {rep.logistic_params.b1, rep.logistic_params.b2,
                          rep.logistic_params.b3, rep.logistic_params.b4,
                          rep.logistic_params.b5};
  j["fit_converged"] = rep.fit_converged;
  j["raw_pearson"] = rep.raw_pearson;
  if (!rep.diagnostic.empty()) j["diagnostic"] = rep.diagnostic;
  return j;
}

inline EvalReport eval_report_from_json(const nlohmann::json& j) {
  EvalReport rep;
  rep.plcc = j.value("plcc", std::numeric_limits<double>::quiet_NaN());
  rep.srcc = j.value("srcc", std::numeric_limits<double>::quiet_NaN());
  rep.n = j.value("n", 0L);
  if (j.contains("logistic_params")) {
    const auto& p = j["logistic_params"];
    rep.logistic_params = {p.at(0), p.at(1), p.at(2), p.at(3), p.at(4)};
  }
  rep.fit_converged = j.value("fit_converged", false);
  rep.raw_pearson = j.value("raw_pearson", std::numeric_limits<double>::quiet_NaN());
  rep.diagnostic = j.value("diagnostic", std::string());
  return rep;
}

struct MarkdownTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render() const {
    std::string out = "|";
    for (const std::string& h : header) out += " " + h + " |";
    out += "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& row : rows) {
      out += "|";
      for (const std::string& cell : row) out += " " + cell + " |";
      out += "\n";
    }
    return out;
  }

  std::string render_csv() const {
    auto esc = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) {
        if (c == '"') q += '"';
        q += c;
      }
      return q + "\"";
    };
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i)
      out += esc(header[i]) + (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        out += esc(row[i]) + (i + 1 < row.size() ? "," : "\n");
    return out;
  }
};

/// Cross-database matrix in the usual layout: one model row with PLCC/SRCC
/// per target, followed by a shaded gain row ("gain:" prefix), and a final
/// mean-gain row.
inline MarkdownTable cross_matrix_table(const CrossMatrix& m) {
  MarkdownTable t;
  t.header.push_back("Method");
  for (const std::string& target : m.targets) {
    t.header.push_back(target + " PLCC");
    t.header.push_back(target + " SRCC");
  }
  for (const std::string& model : m.models) {
    std::vector<std::string> perf_row{model};
    std::vector<std::string> gain_row{"gain: " + model};
    for (const std::string& target : m.targets) {
      for (Metric metric : {Metric::Plcc, Metric::Srcc}) {
        const auto it = m.cells.find({model, target, metric});
        if (it == m.cells.end()) {
          perf_row.push_back("-");
          gain_row.push_back("-");
          continue;
        }
        perf_row.push_back(format_corr(it->second.p_test));
        gain_row.push_back(it->second.gain ? format_percent(*it->second.gain) : "-");
      }
    }
    t.rows.push_back(perf_row);
    t.rows.push_back(gain_row);
  }
  std::vector<std::string> mean_row{"Mean Gain"};
  for (const std::string& target : m.targets) {
    for (Metric metric : {Metric::Plcc, Metric::Srcc}) {
      const auto it = m.mean_gain.find({target, metric});
      mean_row.push_back(it == m.mean_gain.end()
                             ? "-"
                             : format_percent(it->second));
    }
  }
  t.rows.push_back(mean_row);
  return t;
}

inline nlohmann::json cross_matrix_to_json(const CrossMatrix& m) {
  nlohmann::json j;
  j["source_database"] = m.source_database;
  j["models"] = m.models;
  j["targets"] = m.targets;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [key, cell] : m.cells) {
    nlohmann::json c;
    c["model"] = std::get<0>(key);
    c["target"] = std::get<1>(key);
    c["metric"] = metric_name(std::get<2>(key));
    c["p_ori"] = cell.p_ori;
    c["p_test"] = cell.p_test;
    if (cell.gain) c["gain_percent"] = *cell.gain;
    cells.push_back(c);
  }
  j["cells"] = cells;
  nlohmann::json means = nlohmann::json::array();
  for (const auto& [key, v] : m.mean_gain) {
    nlohmann::json c;
    c["target"] = key.first;
    c["metric"] = metric_name(key.second);
    c["mean_gain_percent"] = v;
    means.push_back(c);
  }
  j["mean_gain"] = means;
  return j;
}

inline MarkdownTable rank_table_markdown(const RankTable& rt,
                                         const std::vector<std::string>& perspective_names) {
  MarkdownTable t;
  t.header.push_back("Database");
  for (const std::string& p : perspective_names) t.header.push_back(p);
  t.header.push_back("Final");
  for (std::size_t i = 0; i < rt.databases.size(); ++i) {
    std::vector<std::string> row{rt.databases[i]};
    for (const auto& col : rt.per_perspective) row.push_back(std::to_string(col[i]));
    row.push_back(std::to_string(rt.final_rank[i]));
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace panobench
