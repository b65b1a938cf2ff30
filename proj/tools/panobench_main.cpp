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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "panobench/panobench.hpp"

namespace fs = std::filesystem;
using namespace panobench;

namespace {

struct GlobalOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  bool no_prefit = false;
  std::string out;
};

TrajectoryMode parse_mode(const std::string& mode) {
  if (mode == "image8") return TrajectoryMode::Image8;
  if (mode == "video30") return TrajectoryMode::Video30;
  throw ConfigError("mode must be image8 or video30, got '" + mode + "'");
}

std::vector<DistortionKind> parse_types(const std::string& csv) {
  std::vector<DistortionKind> kinds;
  std::string cur;
  std::stringstream ss(csv);
  while (std::getline(ss, cur, ',')) kinds.push_back(kind_from_code(cur));
  if (kinds.empty()) throw ConfigError("no distortion types given");
  return kinds;
}

int cmd_extract_viewports(const GlobalOptions& g, const std::string& input,
                          const std::string& mode, const std::string& out_dir,
                          double start_lon_deg, bool override_aspect) {
  const ErpImage img = load_erp(input, override_aspect);
  Trajectory traj = make_trajectory(parse_mode(mode));
  traj.start_lon = deg_to_rad(start_lon_deg);
  const std::vector<Viewport> vps = extract_viewports(img, traj);

  fs::create_directories(out_dir);
  nlohmann::json sidecar;
  sidecar["id"] = img.id;
  sidecar["mode"] = mode;
  sidecar["fov_deg"] = rad_to_deg(traj.fov);
  sidecar["viewport_size"] = traj.viewport_size;
  nlohmann::json centers = nlohmann::json::array();
  for (std::size_t m = 0; m < vps.size(); ++m) {
    const std::string name = img.id + "_vp" + std::to_string(m) + ".png";
    save_viewport_png(vps[m], (fs::path(out_dir) / name).string());
    nlohmann::json c;
    c["index"] = m;
    c["file"] = name;
    c["lon_deg"] = rad_to_deg(vps[m].center.lon);
    c["lat_deg"] = rad_to_deg(vps[m].center.lat);
    centers.push_back(c);
  }
  sidecar["centers"] = centers;
  std::ofstream side((fs::path(out_dir) / (img.id + "_viewports.json")).string());
  side << sidecar.dump(2) << '\n';
  std::cout << "wrote " << vps.size() << " viewports to " << out_dir << "\n";
  (void)g;
  return 0;
}

int cmd_synth(const GlobalOptions& g, const std::string& out_dir, const std::string& name,
              const std::string& sources_dir, int generate, int width, int height,
              const std::string& types, int levels, const std::string& scope,
              double cap_radius_deg) {
  std::vector<ErpImage> sources;
  if (!sources_dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(sources_dir)) {
      const std::string ext = entry.path().extension().string();
      if (ext == ".png" || ext == ".jpg" || ext == ".jpeg") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) sources.push_back(load_erp(f.string()));
  } else if (generate > 0) {
    for (int i = 0; i < generate; ++i) {
      char id[32];
      std::snprintf(id, sizeof(id), "src%02d", i);
      sources.push_back(generate_panorama(mix_seed(g.seed, 1000 + i), width, height, id));
    }
  } else {
    throw ConfigError("synth: pass --sources <dir> or --generate <n>");
  }

  DatabasePlan plan;
  plan.types = parse_types(types);
  plan.levels = levels;
  plan.cap_radius = deg_to_rad(cap_radius_deg);
  if (scope == "homogeneous")
    plan.scopes = {DistortionScope::Homogeneous};
  else if (scope == "heterogeneous")
    plan.scopes = {DistortionScope::Heterogeneous};
  else if (scope == "mixed")
    plan.scopes = {DistortionScope::Homogeneous, DistortionScope::Heterogeneous};
  else
    throw ConfigError("scope must be homogeneous, heterogeneous or mixed");

  const DatasetManifest manifest =
      write_database(sources, plan, g.seed, name, out_dir, g.threads);
  std::cout << "wrote " << manifest.rows.size() << " records to " << out_dir
            << " (manifest.csv, seed " << g.seed << ")\n";
  return 0;
}

ExperimentConfig base_experiment_config(const GlobalOptions& g) {
  ExperimentConfig cfg;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  cfg.prefit = !g.no_prefit;
  cfg.out_dir = g.out;
  return cfg;
}

int cmd_train(const GlobalOptions& g, const std::string& manifest, const std::string& out_file,
              double ratio, const std::string& mode) {
  ExperimentConfig cfg = base_experiment_config(g);
  cfg.manifest_path = manifest;
  cfg.scorers = {"composite"};
  cfg.split_ratio = ratio;
  cfg.mode = parse_mode(mode);
  cfg.out_dir.clear();
  const ExperimentResult result = run_experiment(cfg);
  save_scorer(*result.trained, out_file);
  const EvalReport& rep = result.reports.at("composite");
  std::cout << "trained composite scorer -> " << out_file << "\n"
            << "held-out split: PLCC " << format_corr(rep.plcc) << "  SRCC "
            << format_corr(rep.srcc) << "  (n=" << rep.n << ")\n";
  return 0;
}

int cmd_evaluate(const GlobalOptions& g, const std::string& manifest,
                 const std::vector<std::string>& scorers, const std::string& scorer_file,
                 double ratio, const std::string& mode, bool all_images, bool by_content) {
  ExperimentConfig cfg = base_experiment_config(g);
  cfg.manifest_path = manifest;
  if (!scorers.empty()) cfg.scorers = scorers;
  cfg.scorer_file = scorer_file;
  cfg.split_ratio = ratio;
  cfg.mode = parse_mode(mode);
  cfg.use_all_images = all_images;
  cfg.split_by_content = by_content;
  const ExperimentResult result = run_experiment(cfg);
  write_experiment_bundle(cfg, result);
  for (const auto& [scorer, rep] : result.reports) {
    std::cout << scorer << ": PLCC " << format_corr(rep.plcc) << "  SRCC "
              << format_corr(rep.srcc) << "  (n=" << rep.n << ")";
    if (!rep.diagnostic.empty()) std::cout << "  [" << rep.diagnostic << "]";
    std::cout << "\n";
  }
  if (!cfg.out_dir.empty()) std::cout << "bundle written to " << cfg.out_dir << "\n";
  return 0;
}

int cmd_cross(const GlobalOptions& g, const std::string& source,
              const std::vector<std::string>& targets, const std::vector<std::string>& scorers,
              double ratio, const std::string& mode) {
  CrossConfig cfg;
  cfg.source_manifest = source;
  cfg.target_manifests = targets;
  if (!scorers.empty()) cfg.scorers = scorers;
  cfg.split_ratio = ratio;
  cfg.mode = parse_mode(mode);
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  cfg.prefit = !g.no_prefit;
  cfg.out_dir = g.out;
  const CrossResult result = run_cross(cfg);
  write_cross_bundle(cfg, result);
  std::cout << cross_matrix_table(result.matrix).render();
  return 0;
}

int cmd_gap(const GlobalOptions& g, double ori, double test, bool fixtures) {
  if (fixtures) {
    // replay the embedded transfer table through the gap arithmetic
    double max_dev = 0.0;
    int cells = 0;
    for (const fixtures::TransferCell& c : fixtures::planar_transfer_cells()) {
      if (std::isnan(c.p_ori)) continue;
      const auto got = gap_percent(c.p_ori, c.p_test);
      const double dev = std::abs(*got - c.printed_gap);
      max_dev = std::max(max_dev, dev);
      ++cells;
    }
    std::cout << "replayed " << cells << " transfer cells; max |recomputed - printed| = "
              << max_dev << " pp\n";
    if (max_dev > 0.15) {
      std::cerr << "deviation exceeds 0.15 pp\n";
      return 4;
    }
    return 0;
  }
  const auto got = gap_percent(ori, test);
  if (!got) throw NumericError("gap undefined: baseline performance is zero");
  std::cout << format_percent(*got) << "\n";
  (void)g;
  return 0;
}

int cmd_rank(const GlobalOptions& g, bool fixtures_mode, const std::string& values_file,
             const std::string& direction, const std::string& aggregate_file) {
  if (fixtures_mode) {
    RankTable rt;
    std::vector<std::vector<int>> cols(4);
    for (const fixtures::RankRow& row : fixtures::global_ranking()) {
      rt.databases.push_back(row.database);
      cols[0].push_back(row.q1);
      cols[1].push_back(row.q2);
      cols[2].push_back(row.q3);
      cols[3].push_back(row.t);
    }
    rt.per_perspective = cols;
    rt.final_rank = aggregate_ranks(cols, rt.databases);
    std::cout << rank_table_markdown(rt, {"Q1", "Q2", "Q3", "T"}).render();
    return 0;
  }
  if (!aggregate_file.empty()) {
    std::ifstream in(aggregate_file);
    if (!in) throw DataError("cannot open " + aggregate_file);
    nlohmann::json j;
    in >> j;
    const auto names = j.at("databases").get<std::vector<std::string>>();
    std::vector<std::vector<int>> cols;
    for (const auto& col : j.at("perspectives")) cols.push_back(col.get<std::vector<int>>());
    const std::vector<int> final_rank = aggregate_ranks(cols, names);
    for (std::size_t i = 0; i < names.size(); ++i)
      std::cout << names[i] << ": " << final_rank[i] << "\n";
    return 0;
  }
  if (!values_file.empty()) {
    std::ifstream in(values_file);
    if (!in) throw DataError("cannot open " + values_file);
    nlohmann::json j;
    in >> j;
    std::vector<RankedValue> values;
    for (const auto& [name, v] : j.items()) values.push_back({name, v.get<double>()});
    const RankDirection dir = direction == "lower-magnitude"
                                  ? RankDirection::LowerMagnitudeBetter
                                  : RankDirection::HigherBetter;
    const std::vector<int> ranks = rank_from_metric(values, dir);
    for (std::size_t i = 0; i < values.size(); ++i)
      std::cout << values[i].name << ": " << ranks[i] << "\n";
    return 0;
  }
  throw ConfigError("rank: pass --fixtures, --values <file> or --aggregate <file>");
  (void)g;
}

int cmd_report(const GlobalOptions& g, const std::string& input) {
  std::ifstream in(input);
  if (!in) throw DataError("cannot open " + input);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("cannot parse bundle: ") + e.what());
  }
  const std::string kind = j.value("kind", "");
  std::string md;
  if (kind == "experiment") {
    MarkdownTable table;
    table.header = {"Scorer", "PLCC", "SRCC", "n", "prefit converged"};
    for (const auto& [scorer, rep_json] : j.at("reports").items()) {
      const EvalReport rep = eval_report_from_json(rep_json);
      table.rows.push_back({scorer, format_corr(rep.plcc), format_corr(rep.srcc),
                            std::to_string(rep.n), rep.fit_converged ? "yes" : "no"});
    }
    md = "# Evaluation report\n\n- config hash: " + j.value("config_hash", std::string()) +
         "\n\n" + table.render();
  } else if (kind == "cross") {
    md = "# Cross-database evaluation\n\nsee cells in " + input + "\n";
  } else {
    throw DataError("unknown bundle kind '" + kind + "'");
  }
  if (g.out.empty()) {
    std::cout << md;
  } else {
    fs::create_directories(g.out);
    std::ofstream out(fs::path(g.out) / "report.md", std::ios::binary);
    out << md;
    std::cout << "wrote " << (fs::path(g.out) / "report.md").string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"panobench: panoramic image quality benchmarking toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "global 64-bit seed (recorded in every output)");
  app.add_option("--threads", g.threads, "worker threads for per-image stages");
  app.add_flag("--no-prefit", g.no_prefit, "report raw PLCC without the logistic prefit");
  app.add_option("--out", g.out, "output directory for report bundles");

  // extract-viewports
  auto* ev = app.add_subcommand("extract-viewports", "render trajectory viewports to PNG");
  std::string ev_input, ev_mode = "image8", ev_out = "viewports";
  double ev_start_lon = 0.0;
  bool ev_override = false;
  ev->add_option("--input", ev_input, "panorama file (png/jpeg)")->required();
  ev->add_option("--mode", ev_mode, "image8 | video30");
  ev->add_option("--out-dir", ev_out, "output directory");
  ev->add_option("--start-lon-deg", ev_start_lon, "trajectory start longitude, degrees");
  ev->add_flag("--override-aspect", ev_override, "accept rasters that are not 2:1");

  // synth
  auto* synth = app.add_subcommand("synth", "synthesize a distorted panorama database");
  std::string sy_out = "synth_db", sy_name = "synthetic", sy_sources, sy_types = "GB,GN";
  std::string sy_scope = "homogeneous";
  int sy_generate = 0, sy_width = 1024, sy_height = 512, sy_levels = 5;
  double sy_cap = 50.0;
  synth->add_option("--out-dir", sy_out, "database directory");
  synth->add_option("--name", sy_name, "database name");
  synth->add_option("--sources", sy_sources, "directory of source panoramas");
  synth->add_option("--generate", sy_generate, "generate N procedural source panoramas");
  synth->add_option("--width", sy_width, "generated panorama width");
  synth->add_option("--height", sy_height, "generated panorama height");
  synth->add_option("--types", sy_types, "comma list of GB,GN,BD,ST");
  synth->add_option("--levels", sy_levels, "severity levels per type (1..5)");
  synth->add_option("--scope", sy_scope, "homogeneous | heterogeneous | mixed");
  synth->add_option("--cap-radius-deg", sy_cap, "heterogeneous cap radius, degrees");

  // train
  auto* train = app.add_subcommand("train", "train the composite scorer on a manifest");
  std::string tr_manifest, tr_out = "scorer_composite.json", tr_mode = "image8";
  double tr_ratio = 0.8;
  train->add_option("--manifest", tr_manifest, "dataset manifest csv")->required();
  train->add_option("--scorer-out", tr_out, "output scorer document");
  train->add_option("--ratio", tr_ratio, "train fraction");
  train->add_option("--mode", tr_mode, "image8 | video30");

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "evaluate scorers on a manifest");
  std::string eva_manifest, eva_scorer_file, eva_mode = "image8";
  std::vector<std::string> eva_scorers;
  double eva_ratio = 0.8;
  bool eva_all = false, eva_by_content = false;
  eval->add_option("--manifest", eva_manifest, "dataset manifest csv")->required();
  eval->add_option("--scorer", eva_scorers,
                   "scorer names (composite, sharpness, noise-mad, vp-psnr, ws-psnr)");
  eval->add_option("--scorer-file", eva_scorer_file, "pretrained composite document");
  eval->add_option("--ratio", eva_ratio, "train fraction");
  eval->add_option("--mode", eva_mode, "image8 | video30");
  eval->add_flag("--all-images", eva_all, "score every record instead of the test split");
  eval->add_flag("--split-by-content", eva_by_content, "group split by source content");

  // cross
  auto* cross = app.add_subcommand("cross", "cross-database gain matrix");
  std::string cr_source, cr_mode = "image8";
  std::vector<std::string> cr_targets, cr_scorers;
  double cr_ratio = 0.8;
  cross->add_option("--source", cr_source, "source manifest csv")->required();
  cross->add_option("--targets", cr_targets, "target manifest csvs")->required();
  cross->add_option("--scorer", cr_scorers, "scorer names");
  cross->add_option("--ratio", cr_ratio, "train fraction on the source");
  cross->add_option("--mode", cr_mode, "image8 | video30");

  // gap
  auto* gap_cmd = app.add_subcommand("gap", "gap/gain arithmetic");
  double gp_ori = 0.0, gp_test = 0.0;
  bool gp_fixtures = false;
  auto* gp_ori_opt = gap_cmd->add_option("--ori", gp_ori, "baseline performance");
  auto* gp_test_opt = gap_cmd->add_option("--test", gp_test, "transfer performance");
  gap_cmd->add_flag("--fixtures", gp_fixtures, "replay the embedded transfer table");
  gp_ori_opt->needs(gp_test_opt);

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "database ranking");
  std::string rk_values, rk_direction = "higher", rk_aggregate;
  bool rk_fixtures = false;
  rank_cmd->add_flag("--fixtures", rk_fixtures, "reproduce the embedded global ranking");
  rank_cmd->add_option("--values", rk_values, "json map database -> value");
  rank_cmd->add_option("--direction", rk_direction, "higher | lower-magnitude");
  rank_cmd->add_option("--aggregate", rk_aggregate,
                       "json with databases + perspective rank columns");

  // report
  auto* report_cmd = app.add_subcommand("report", "re-render a bundle json");
  std::string rp_input;
  report_cmd->add_option("--input", rp_input, "bundle json")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ev->parsed())
      return cmd_extract_viewports(g, ev_input, ev_mode, ev_out, ev_start_lon, ev_override);
    if (synth->parsed())
      return cmd_synth(g, sy_out, sy_name, sy_sources, sy_generate, sy_width, sy_height,
                       sy_types, sy_levels, sy_scope, sy_cap);
    if (train->parsed()) return cmd_train(g, tr_manifest, tr_out, tr_ratio, tr_mode);
    if (eval->parsed())
      return cmd_evaluate(g, eva_manifest, eva_scorers, eva_scorer_file, eva_ratio, eva_mode,
                          eva_all, eva_by_content);
    if (cross->parsed())
      return cmd_cross(g, cr_source, cr_targets, cr_scorers, cr_ratio, cr_mode);
    if (gap_cmd->parsed()) return cmd_gap(g, gp_ori, gp_test, gp_fixtures);
    if (rank_cmd->parsed())
      return cmd_rank(g, rk_fixtures, rk_values, rk_direction, rk_aggregate);
    if (report_cmd->parsed()) return cmd_report(g, rp_input);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
