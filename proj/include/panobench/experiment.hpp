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

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "panobench/analysis.hpp"
#include "panobench/correlation.hpp"
#include "panobench/dataset.hpp"
#include "panobench/errors.hpp"
#include "panobench/image_io.hpp"
#include "panobench/manifest.hpp"
#include "panobench/parallel.hpp"
#include "panobench/report.hpp"
#include "panobench/scorers.hpp"
#include "panobench/viewport_gen.hpp"

namespace panobench {

struct ExperimentConfig {
  std::string manifest_path;
  std::vector<std::string> scorers = {"composite"};
  TrajectoryMode mode = TrajectoryMode::Image8;
  double split_ratio = 0.8;
  std::uint64_t seed = 1;
  bool prefit = true;
  bool split_by_content = false;
  bool use_all_images = false;  // score every record instead of the test split
  bool allow_any_aspect = false;
  int threads = 1;
  std::string scorer_file;  // optional pretrained composite document
  std::string out_dir;      // empty: nothing written
};

namespace detail {

template <typename Fn>
auto with_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
  const auto tag = [stage](const std::string& msg) {
    return "stage=" + std::string(stage) + ": " + msg;
  };
  try {
    return fn();
  } catch (const ConfigError& e) {
    throw ConfigError(tag(e.what()));
  } catch (const DataError& e) {
    throw DataError(tag(e.what()));
  } catch (const NumericError& e) {
    throw NumericError(tag(e.what()));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(tag(e.what()));
  }
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace detail

inline nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["manifest"] = c.manifest_path;
  j["scorers"] = c.scorers;
  j["mode"] = c.mode == TrajectoryMode::Image8 ? "image8" : "video30";
  j["split_ratio"] = c.split_ratio;
  j["seed"] = c.seed;
  j["prefit"] = c.prefit;
  j["split_by_content"] = c.split_by_content;
  j["use_all_images"] = c.use_all_images;
  j["scorer_file"] = c.scorer_file;
  return j;
}

inline std::string config_hash(const ExperimentConfig& c) {
  return detail::hex64(detail::fnv1a(config_to_json(c).dump()));
}

/// Per-record quantities gathered in one pass over the pixels.
struct RecordSignals {
  std::vector<FeatureVector> vp_features;
  double noise_mad = std::numeric_limits<double>::quiet_NaN();
  double vp_psnr = std::numeric_limits<double>::quiet_NaN();
  double ws_psnr_db = std::numeric_limits<double>::quiet_NaN();
};

struct ExperimentResult {
  DatasetManifest manifest;
  std::vector<QualityRecord> records;            // split labels + merged MOS
  std::map<std::string, std::vector<double>> predictions;  // scorer -> per record
  std::map<std::string, EvalReport> reports;     // scorer -> evaluated split
  std::optional<LinearScorer> trained;
  std::string hash;
};

namespace detail {

struct ScorerNeeds {
  bool noise_mad = false;
  bool reference = false;
  bool ws = false;
};

inline ScorerNeeds analyze_scorers(const std::vector<std::string>& names,
                                   const std::string& scorer_file) {
  ScorerNeeds needs;
  if (names.empty()) throw ConfigError("no scorers requested");
  for (const std::string& name : names) {
    const ScorerInfo* info = find_scorer(name);
    if (info == nullptr)
      throw ConfigError("unknown scorer '" + name + "' (catalog: composite, sharpness, "
                        "noise-mad, vp-psnr, ws-psnr)");
    if (std::string(info->name) == "noise-mad") needs.noise_mad = true;
    if (std::string(info->name) == "vp-psnr") needs.reference = true;
    if (std::string(info->name) == "ws-psnr") needs.ws = true;
  }
  (void)scorer_file;
  return needs;
}

inline RecordSignals gather_signals(const DatasetManifest& manifest, const ManifestRow& row,
                                    const Trajectory& traj, const ScorerNeeds& needs,
                                    bool allow_any_aspect) {
  RecordSignals sig;
  const ErpImage img = load_erp(manifest.resolve(row.path).string(), allow_any_aspect);
  const std::vector<Viewport> vps = extract_viewports(img, traj);
  sig.vp_features.reserve(vps.size());
  for (const Viewport& vp : vps) sig.vp_features.push_back(extract_features(vp));
  if (needs.noise_mad) sig.noise_mad = score_noise_mad(vps);
  if (needs.reference || needs.ws) {
    if (row.reference_path.empty())
      throw ConfigError("record '" + row.id + "' has no reference image but a "
                        "full-reference scorer was requested");
    const ErpImage ref = load_erp(manifest.resolve(row.reference_path).string(),
                                  allow_any_aspect);
    if (needs.reference) sig.vp_psnr = score_vp_psnr(vps, extract_viewports(ref, traj));
    if (needs.ws) sig.ws_psnr_db = capped_db(ws_psnr(img, ref));
  }
  return sig;
}

inline double predict(const std::string& scorer, const RecordSignals& sig,
                      const std::optional<LinearScorer>& trained) {
  if (scorer == "composite") {
    if (!trained) throw ConfigError("composite scorer is not trained");
    std::vector<double> per;
    per.reserve(sig.vp_features.size());
    for (const FeatureVector& f : sig.vp_features)
      per.push_back(score_viewport(*trained, f));
    return pool_scores(per);
  }
  if (scorer == "sharpness") {
    std::vector<double> per;
    per.reserve(sig.vp_features.size());
    for (const FeatureVector& f : sig.vp_features) per.push_back(std::log1p(f[2]));
    return pool_scores(per);
  }
  if (scorer == "noise-mad") return sig.noise_mad;
  if (scorer == "vp-psnr") return sig.vp_psnr;
  if (scorer == "ws-psnr") return sig.ws_psnr_db;
  throw ConfigError("unknown scorer '" + scorer + "'");
}

}  // namespace detail

/// Full single-database protocol: load, merge dual ratings, split, extract
/// viewports, features, train the composite, score and evaluate the test
/// split. Pure given (manifest, config); the report bundle is written by
/// write_experiment_bundle.
inline ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result;
  result.hash = config_hash(config);

  const detail::ScorerNeeds needs = detail::with_stage("configure", [&] {
    return detail::analyze_scorers(config.scorers, config.scorer_file);
  });

  detail::with_stage("load", [&] {
    result.manifest = load_manifest(config.manifest_path);
    result.records = records_from_manifest(result.manifest);
    if (result.records.empty()) throw DataError("manifest has no rows");
  });

  detail::with_stage("split", [&] {
    const bool all_labeled =
        std::all_of(result.records.begin(), result.records.end(),
                    [](const QualityRecord& r) { return r.split.has_value(); });
    if (config.use_all_images) {
      for (QualityRecord& r : result.records) r.split = Split::Test;
    } else if (!all_labeled) {
      if (config.split_by_content) {
        std::vector<std::string> keys;
        keys.reserve(result.manifest.rows.size());
        for (const ManifestRow& row : result.manifest.rows)
          keys.push_back(row.reference_path.empty() ? row.id : row.reference_path);
        split_dataset(result.records, config.split_ratio, config.seed, &keys);
      } else {
        split_dataset(result.records, config.split_ratio, config.seed);
      }
    }
  });

  std::vector<RecordSignals> signals(result.records.size());
  detail::with_stage("extract", [&] {
    const Trajectory traj = make_trajectory(config.mode);
    parallel_for(result.records.size(), config.threads, [&](std::size_t i) {
      signals[i] = detail::gather_signals(result.manifest, result.manifest.rows[i], traj,
                                          needs, config.allow_any_aspect);
    });
  });

  const bool wants_composite =
      std::find(config.scorers.begin(), config.scorers.end(), "composite") !=
      config.scorers.end();
  if (wants_composite) {
    detail::with_stage("train", [&] {
      if (!config.scorer_file.empty()) {
        result.trained = load_scorer(config.scorer_file);
        return;
      }
      std::vector<TrainingExample> train_set;
      for (std::size_t i = 0; i < result.records.size(); ++i)
        if (result.records[i].split == Split::Train)
          train_set.push_back({signals[i].vp_features, result.records[i].mos});
      result.trained = train_linear_scorer(train_set);
    });
  }

  detail::with_stage("score", [&] {
    for (const std::string& scorer : config.scorers) {
      std::vector<double>& preds = result.predictions[scorer];
      preds.resize(result.records.size());
      for (std::size_t i = 0; i < result.records.size(); ++i)
        preds[i] = detail::predict(scorer, signals[i], result.trained);
    }
    for (std::size_t i = 0; i < result.records.size(); ++i)
      result.records[i].predicted = result.predictions[config.scorers.front()][i];
  });

  detail::with_stage("evaluate", [&] {
    for (const std::string& scorer : config.scorers) {
      std::vector<double> pred, mos;
      for (std::size_t i = 0; i < result.records.size(); ++i) {
        if (result.records[i].split != Split::Test) continue;
        pred.push_back(result.predictions[scorer][i]);
        mos.push_back(result.records[i].mos);
      }
      if (pred.size() < 3)
        throw DataError("test split has fewer than 3 records; cannot evaluate");
      result.reports[scorer] = evaluate_scores(pred, mos, config.prefit);
    }
  });

  return result;
}

/// Serializes an experiment into the output bundle. Buffered in memory and
/// written at the end, so a failure leaves no partial files behind.
inline void write_experiment_bundle(const ExperimentConfig& config,
                                    const ExperimentResult& result) {
  if (config.out_dir.empty()) return;

  nlohmann::json j;
  j["tool"] = "panobench";
  j["kind"] = "experiment";
  j["config"] = config_to_json(config);
  j["config_hash"] = result.hash;
  j["seed"] = config.seed;
  nlohmann::json reports;
  for (const auto& [scorer, rep] : result.reports) reports[scorer] = eval_report_to_json(rep);
  j["reports"] = reports;

  std::string md = "# Evaluation report\n\n";
  md += "- manifest: " + config.manifest_path + "\n";
  md += "- seed: " + std::to_string(config.seed) + "\n";
  md += "- config hash: " + result.hash + "\n\n";
  MarkdownTable table;
  table.header = {"Scorer", "PLCC", "SRCC", "n", "prefit converged"};
  for (const auto& [scorer, rep] : result.reports)
    table.rows.push_back({scorer, format_corr(rep.plcc), format_corr(rep.srcc),
                          std::to_string(rep.n), rep.fit_converged ? "yes" : "no"});
  md += table.render();

  MarkdownTable records;
  records.header = {"id", "split", "mos"};
  for (const std::string& scorer : config.scorers) records.header.push_back(scorer);
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const QualityRecord& r = result.records[i];
    std::vector<std::string> row{r.image_id,
                                 r.split == Split::Train ? "train" : "test"};
    char mos_buf[32];
    std::snprintf(mos_buf, sizeof(mos_buf), "%.6g", r.mos);
    row.push_back(mos_buf);
    for (const std::string& scorer : config.scorers) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.9g", result.predictions.at(scorer)[i]);
      row.push_back(buf);
    }
    records.rows.push_back(row);
  }

  std::map<std::string, std::string> files;
  files["report.json"] = j.dump(2) + "\n";
  files["report.md"] = md;
  files["records.csv"] = records.render_csv();
  if (result.trained) files["scorer_composite.json"] = scorer_to_json(*result.trained).dump(2) + "\n";

  std::filesystem::create_directories(config.out_dir);
  for (const auto& [name, content] : files) {
    std::ofstream out(std::filesystem::path(config.out_dir) / name, std::ios::binary);
    if (!out) throw DataError("cannot write output file: " + name);
    out << content;
  }
}

// --------------------------------------------------------------------------
// Cross-database validation.

struct CrossConfig {
  std::string source_manifest;
  std::vector<std::string> target_manifests;
  std::vector<std::string> scorers = {"composite"};
  TrajectoryMode mode = TrajectoryMode::Image8;
  double split_ratio = 0.8;
  std::uint64_t seed = 1;
  bool prefit = true;
  bool allow_any_aspect = false;
  int threads = 1;
  std::string out_dir;
};

struct CrossResult {
  CrossMatrix matrix;
  std::map<std::string, EvalReport> source_reports;  // scorer -> in-domain test report
  std::string hash;
};

/// Trains on the source database's training split, takes p_ori from its test
/// split, then scores every image of each target database with the frozen
/// scorers and fills the gain matrix.
inline CrossResult run_cross(const CrossConfig& config) {
  ExperimentConfig source_cfg;
  source_cfg.manifest_path = config.source_manifest;
  source_cfg.scorers = config.scorers;
  source_cfg.mode = config.mode;
  source_cfg.split_ratio = config.split_ratio;
  source_cfg.seed = config.seed;
  source_cfg.prefit = config.prefit;
  source_cfg.allow_any_aspect = config.allow_any_aspect;
  source_cfg.threads = config.threads;

  const ExperimentResult source = run_experiment(source_cfg);

  CrossResult result;
  result.source_reports = source.reports;
  result.matrix.source_database = source.manifest.name;
  result.matrix.models = config.scorers;

  nlohmann::json hash_src = config_to_json(source_cfg);
  hash_src["targets"] = config.target_manifests;
  result.hash = detail::hex64(detail::fnv1a(hash_src.dump()));

  std::optional<std::string> trained_path;
  std::string trained_doc;
  if (source.trained) trained_doc = scorer_to_json(*source.trained).dump();

  for (const std::string& target_path : config.target_manifests) {
    // the diagonal is the source's own held-out evaluation: zero gain
    if (target_path == config.source_manifest) {
      result.matrix.targets.push_back(source.manifest.name);
      for (const std::string& scorer : config.scorers) {
        const EvalReport& ori = source.reports.at(scorer);
        result.matrix.insert(scorer, source.manifest.name, Metric::Plcc, ori.plcc, ori.plcc);
        result.matrix.insert(scorer, source.manifest.name, Metric::Srcc, ori.srcc, ori.srcc);
      }
      continue;
    }

    ExperimentConfig target_cfg = source_cfg;
    target_cfg.manifest_path = target_path;
    target_cfg.use_all_images = true;  // every image of the testing database
    target_cfg.out_dir.clear();

    if (source.trained) {
      // score the target with the frozen source scorer
      const auto tmp = std::filesystem::temp_directory_path() /
                       ("panobench_scorer_" + result.hash + ".json");
      if (!trained_path) std::ofstream(tmp) << trained_doc;
      target_cfg.scorer_file = tmp.string();
      trained_path = tmp.string();
    }
    const ExperimentResult target = run_experiment(target_cfg);

    const std::string target_name = target.manifest.name;
    result.matrix.targets.push_back(target_name);
    for (const std::string& scorer : config.scorers) {
      const EvalReport& ori = source.reports.at(scorer);
      const EvalReport& test = target.reports.at(scorer);
      result.matrix.insert(scorer, target_name, Metric::Plcc, ori.plcc, test.plcc);
      result.matrix.insert(scorer, target_name, Metric::Srcc, ori.srcc, test.srcc);
    }
  }
  if (trained_path) std::filesystem::remove(*trained_path);
  result.matrix.finalize_means();
  return result;
}

inline void write_cross_bundle(const CrossConfig& config, const CrossResult& result) {
  if (config.out_dir.empty()) return;

  nlohmann::json j;
  j["tool"] = "panobench";
  j["kind"] = "cross";
  j["source"] = config.source_manifest;
  j["targets"] = config.target_manifests;
  j["scorers"] = config.scorers;
  j["seed"] = config.seed;
  j["config_hash"] = result.hash;
  j["matrix"] = cross_matrix_to_json(result.matrix);
  nlohmann::json src;
  for (const auto& [scorer, rep] : result.source_reports)
    src[scorer] = eval_report_to_json(rep);
  j["source_reports"] = src;

  const MarkdownTable table = cross_matrix_table(result.matrix);
  std::string md = "# Cross-database evaluation\n\n";
  md += "- source: " + result.matrix.source_database + "\n";
  md += "- seed: " + std::to_string(config.seed) + "\n";
  md += "- config hash: " + result.hash + "\n\n";
  md += table.render();

  std::filesystem::create_directories(config.out_dir);
  const std::map<std::string, std::string> files = {
      {"cross.json", j.dump(2) + "\n"},
      {"cross.md", md},
      {"cross.csv", table.render_csv()},
  };
  for (const auto& [name, content] : files) {
    std::ofstream out(std::filesystem::path(config.out_dir) / name, std::ios::binary);
    if (!out) throw DataError("cannot write output file: " + name);
    out << content;
  }
}

}  // namespace panobench
