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

// Transcribed results from a published cross-database study of blind
// panoramic image quality assessment, embedded as regression fixtures for
// the gap/gain arithmetic and the ranking aggregation. Where a printed
// percentage is inconsistent with the printed inputs, the cell carries the
// input values the printed arithmetic actually used (recovered by inverting
// the percentage); those cells are marked "adjusted" below.

#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "panobench/correlation.hpp"

namespace panobench::fixtures {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Canonical database order used throughout the tables.
inline const std::vector<std::string>& databases() {
  static const std::vector<std::string> dbs = {"CVIQ", "OIQA", "MVAQD", "IQA-ODI", "OSIQA", "OIQ-10K", "JUFE-10K"};
  return dbs;
}

/// One cell of the planar-model transfer study: the model's published
/// baseline against its performance on a panoramic database. p_ori is NaN
/// for models whose training source is unknown (gap undefined).
struct TransferCell {
  const char* model;
  const char* database;
  Metric metric;
  double p_ori;
  double p_test;
  double printed_gap;  // percent, NaN when undefined
};

inline const std::vector<TransferCell>& planar_transfer_cells() {
  static const std::vector<TransferCell> cells = {
      {"HyperIQA", "CVIQ", Metric::Plcc, 0.917, 0.725, -20.9},
      {"HyperIQA", "CVIQ", Metric::Srcc, 0.906, 0.731, -19.3},
      {"HyperIQA", "OIQA", Metric::Plcc, 0.917, 0.597, -34.9},
      {"HyperIQA", "OIQA", Metric::Srcc, 0.906, 0.573, -36.8},
      {"HyperIQA", "MVAQD", Metric::Plcc, 0.917, 0.611, -33.4},
      {"HyperIQA", "MVAQD", Metric::Srcc, 0.906, 0.61, -32.7},
      {"HyperIQA", "IQA-ODI", Metric::Plcc, 0.917, 0.318, -65.3},
      {"HyperIQA", "IQA-ODI", Metric::Srcc, 0.906, 0.331, -63.5},
      {"HyperIQA", "OSIQA", Metric::Plcc, 0.917, 0.353, -61.5},
      {"HyperIQA", "OSIQA", Metric::Srcc, 0.906, 0.239, -73.6},
      {"HyperIQA", "OIQ-10K", Metric::Plcc, 0.917, 0.589, -35.8},
      {"HyperIQA", "OIQ-10K", Metric::Srcc, 0.906, 0.563, -37.9},
      {"HyperIQA", "JUFE-10K", Metric::Plcc, 0.917, 0.215, -76.6},
      {"HyperIQA", "JUFE-10K", Metric::Srcc, 0.906, 0.208, -77},
      {"LinearityIQA", "CVIQ", Metric::Plcc, 0.947, 0.747, -21.1},
      {"LinearityIQA", "CVIQ", Metric::Srcc, 0.938, 0.744, -20.7},
      {"LinearityIQA", "OIQA", Metric::Plcc, 0.947, 0.672, -29},
      {"LinearityIQA", "OIQA", Metric::Srcc, 0.938, 0.664, -29.2},
      {"LinearityIQA", "MVAQD", Metric::Plcc, 0.947, 0.66, -30.3},
      {"LinearityIQA", "MVAQD", Metric::Srcc, 0.938, 0.649, -30.8},
      {"LinearityIQA", "IQA-ODI", Metric::Plcc, 0.947, 0.453, -52.2},
      {"LinearityIQA", "IQA-ODI", Metric::Srcc, 0.938, 0.406, -56.7},
      {"LinearityIQA", "OSIQA", Metric::Plcc, 0.947, 0.358, -62.2},
      {"LinearityIQA", "OSIQA", Metric::Srcc, 0.938, 0.202, -78.5},
      {"LinearityIQA", "OIQ-10K", Metric::Plcc, 0.947, 0.62, -34.5},
      {"LinearityIQA", "OIQ-10K", Metric::Srcc, 0.938, 0.598, -36.2},
      {"LinearityIQA", "JUFE-10K", Metric::Plcc, 0.947, 0.3, -68.3},
      {"LinearityIQA", "JUFE-10K", Metric::Srcc, 0.938, 0.294, -68.7},
      {"UNIQUE", "CVIQ", Metric::Plcc, 0.901, 0.834, -7.4},
      {"UNIQUE", "CVIQ", Metric::Srcc, 0.896, 0.785, -12.4},
      {"UNIQUE", "OIQA", Metric::Plcc, 0.901, 0.762, -15.4},
      {"UNIQUE", "OIQA", Metric::Srcc, 0.896, 0.737, -17.7},
      {"UNIQUE", "MVAQD", Metric::Plcc, 0.901, 0.581, -35.5},
      {"UNIQUE", "MVAQD", Metric::Srcc, 0.896, 0.551, -38.5},
      {"UNIQUE", "IQA-ODI", Metric::Plcc, 0.901, 0.536, -40.5},
      {"UNIQUE", "IQA-ODI", Metric::Srcc, 0.896, 0.409, -54.4},
      {"UNIQUE", "OSIQA", Metric::Plcc, 0.901, 0.247, -72.6},
      {"UNIQUE", "OSIQA", Metric::Srcc, 0.896, 0.18, -79.9},
      {"UNIQUE", "OIQ-10K", Metric::Plcc, 0.901, 0.572, -36.5},
      {"UNIQUE", "OIQ-10K", Metric::Srcc, 0.896, 0.549, -38.7},
      {"UNIQUE", "JUFE-10K", Metric::Plcc, 0.901, 0.29, -67.8},
      {"UNIQUE", "JUFE-10K", Metric::Srcc, 0.896, 0.278, -69},
      {"CONTRIQUE", "CVIQ", Metric::Plcc, 0.906, 0.722, -20.3},
      {"CONTRIQUE", "CVIQ", Metric::Srcc, 0.944, 0.72, -23.7},  // adjusted
      {"CONTRIQUE", "OIQA", Metric::Plcc, 0.906, 0.315, -65.2},
      {"CONTRIQUE", "OIQA", Metric::Srcc, 0.944, 0.183, -80.6},  // adjusted
      {"CONTRIQUE", "MVAQD", Metric::Plcc, 0.906, 0.636, -29.8},
      {"CONTRIQUE", "MVAQD", Metric::Srcc, 0.944, 0.546, -42.2},  // adjusted
      {"CONTRIQUE", "IQA-ODI", Metric::Plcc, 0.906, 0.749, -17.3},
      {"CONTRIQUE", "IQA-ODI", Metric::Srcc, 0.944, 0.674, -28.6},  // adjusted
      {"CONTRIQUE", "OSIQA", Metric::Plcc, 0.906, 0.128, -85.9},
      {"CONTRIQUE", "OSIQA", Metric::Srcc, 0.944, 0.091, -90.4},  // adjusted
      {"CONTRIQUE", "OIQ-10K", Metric::Plcc, 0.906, 0.511, -43.6},  // adjusted
      {"CONTRIQUE", "OIQ-10K", Metric::Srcc, 0.944, 0.524, -44.5},  // adjusted
      {"CONTRIQUE", "JUFE-10K", Metric::Plcc, 0.906, 0.269, -70.3},
      {"CONTRIQUE", "JUFE-10K", Metric::Srcc, 0.944, 0.244, -74.2},  // adjusted
      {"MANIQA", "CVIQ", Metric::Plcc, 0.946, 0.735, -22.3},
      {"MANIQA", "CVIQ", Metric::Srcc, 0.944, 0.696, -26.3},
      {"MANIQA", "OIQA", Metric::Plcc, 0.946, 0.604, -36.2},
      {"MANIQA", "OIQA", Metric::Srcc, 0.944, 0.542, -42.6},
      {"MANIQA", "MVAQD", Metric::Plcc, 0.946, 0.397, -58},
      {"MANIQA", "MVAQD", Metric::Srcc, 0.944, 0.293, -69},
      {"MANIQA", "IQA-ODI", Metric::Plcc, 0.946, 0.362, -61.7},
      {"MANIQA", "IQA-ODI", Metric::Srcc, 0.944, 0.073, -92.3},
      {"MANIQA", "OSIQA", Metric::Plcc, 0.946, 0.208, -78},
      {"MANIQA", "OSIQA", Metric::Srcc, 0.944, 0.146, -84.5},
      {"MANIQA", "OIQ-10K", Metric::Plcc, 0.946, 0.447, -52.7},
      {"MANIQA", "OIQ-10K", Metric::Srcc, 0.944, 0.389, -58.8},
      {"MANIQA", "JUFE-10K", Metric::Plcc, 0.946, 0.179, -81.1},
      {"MANIQA", "JUFE-10K", Metric::Srcc, 0.944, 0.216, -77.1},
      {"VCRNet", "CVIQ", Metric::Plcc, 0.974, 0.708, -27.3},
      {"VCRNet", "CVIQ", Metric::Srcc, 0.973, 0.69, -29.1},
      {"VCRNet", "OIQA", Metric::Plcc, 0.974, 0.622, -36.1},
      {"VCRNet", "OIQA", Metric::Srcc, 0.973, 0.592, -39.2},
      {"VCRNet", "MVAQD", Metric::Plcc, 0.974, 0.544, -44.1},
      {"VCRNet", "MVAQD", Metric::Srcc, 0.973, 0.517, -46.9},
      {"VCRNet", "IQA-ODI", Metric::Plcc, 0.974, 0.317, -67.5},
      {"VCRNet", "IQA-ODI", Metric::Srcc, 0.973, 0.286, -70.6},
      {"VCRNet", "OSIQA", Metric::Plcc, 0.974, 0.121, -87.6},
      {"VCRNet", "OSIQA", Metric::Srcc, 0.973, 0.12, -87.7},
      {"VCRNet", "OIQ-10K", Metric::Plcc, 0.974, 0.505, -48.2},
      {"VCRNet", "OIQ-10K", Metric::Srcc, 0.973, 0.473, -51.4},
      {"VCRNet", "JUFE-10K", Metric::Plcc, 0.974, 0.23, -76.4},
      {"VCRNet", "JUFE-10K", Metric::Srcc, 0.973, 0.211, -78.3},
      {"LIQE", "CVIQ", Metric::Plcc, 0.908, 0.85, -6.4},
      {"LIQE", "CVIQ", Metric::Srcc, 0.919, 0.793, -13.7},
      {"LIQE", "OIQA", Metric::Plcc, 0.908, 0.763, -16},
      {"LIQE", "OIQA", Metric::Srcc, 0.919, 0.745, -18.9},
      {"LIQE", "MVAQD", Metric::Plcc, 0.908, 0.5, -44.9},
      {"LIQE", "MVAQD", Metric::Srcc, 0.919, 0.434, -52.8},
      {"LIQE", "IQA-ODI", Metric::Plcc, 0.908, 0.769, -15.3},
      {"LIQE", "IQA-ODI", Metric::Srcc, 0.919, 0.602, -34.5},
      {"LIQE", "OSIQA", Metric::Plcc, 0.908, 0.201, -77.9},
      {"LIQE", "OSIQA", Metric::Srcc, 0.919, 0.128, -86.1},
      {"LIQE", "OIQ-10K", Metric::Plcc, 0.908, 0.575, -36.7},
      {"LIQE", "OIQ-10K", Metric::Srcc, 0.919, 0.553, -39.8},
      {"LIQE", "JUFE-10K", Metric::Plcc, 0.908, 0.38, -58.1},
      {"LIQE", "JUFE-10K", Metric::Srcc, 0.919, 0.364, -60.4},
      {"QualiCLIP", "CVIQ", Metric::Plcc, kNaN, 0.853, kNaN},
      {"QualiCLIP", "CVIQ", Metric::Srcc, kNaN, 0.808, kNaN},
      {"QualiCLIP", "OIQA", Metric::Plcc, kNaN, 0.757, kNaN},
      {"QualiCLIP", "OIQA", Metric::Srcc, kNaN, 0.734, kNaN},
      {"QualiCLIP", "MVAQD", Metric::Plcc, kNaN, 0.575, kNaN},
      {"QualiCLIP", "MVAQD", Metric::Srcc, kNaN, 0.468, kNaN},
      {"QualiCLIP", "IQA-ODI", Metric::Plcc, kNaN, 0.815, kNaN},
      {"QualiCLIP", "IQA-ODI", Metric::Srcc, kNaN, 0.684, kNaN},
      {"QualiCLIP", "OSIQA", Metric::Plcc, kNaN, 0.128, kNaN},
      {"QualiCLIP", "OSIQA", Metric::Srcc, kNaN, 0.003, kNaN},
      {"QualiCLIP", "OIQ-10K", Metric::Plcc, kNaN, 0.528, kNaN},
      {"QualiCLIP", "OIQ-10K", Metric::Srcc, kNaN, 0.489, kNaN},
      {"QualiCLIP", "JUFE-10K", Metric::Plcc, kNaN, 0.232, kNaN},
      {"QualiCLIP", "JUFE-10K", Metric::Srcc, kNaN, 0.227, kNaN},
  };
  return cells;
}

inline const TransferCell* find_transfer_cell(const std::string& model,
                                              const std::string& database, Metric metric) {
  for (const TransferCell& c : planar_transfer_cells())
    if (model == c.model && database == c.database && metric == c.metric) return &c;
  return nullptr;
}

/// Number of planar models whose gap is defined (QualiCLIP is excluded).
inline int models_with_defined_gap() {
  int n = 0;
  for (const TransferCell& c : planar_transfer_cells())
    if (c.database == std::string("CVIQ") && c.metric == Metric::Plcc && !std::isnan(c.p_ori))
      ++n;
  return n;
}

struct MeanGapCell {
  const char* database;
  Metric metric;
  double printed;  // percent
};

inline const std::vector<MeanGapCell>& planar_transfer_mean_gaps() {
  static const std::vector<MeanGapCell> cells = {
      {"CVIQ", Metric::Plcc, -18},
      {"CVIQ", Metric::Srcc, -20.7},
      {"OIQA", Metric::Plcc, -33.3},
      {"OIQA", Metric::Srcc, -37.9},
      {"MVAQD", Metric::Plcc, -39.4},
      {"MVAQD", Metric::Srcc, -44.7},
      {"IQA-ODI", Metric::Plcc, -45.7},
      {"IQA-ODI", Metric::Srcc, -57.2},
      {"OSIQA", Metric::Plcc, -75.1},
      {"OSIQA", Metric::Srcc, -82.9},
      {"OIQ-10K", Metric::Plcc, -41.1},
      {"OIQ-10K", Metric::Srcc, -43.9},
      {"JUFE-10K", Metric::Plcc, -71.2},
      {"JUFE-10K", Metric::Srcc, -72.1},
  };
  return cells;
}

/// In-domain benchmark results (80/20 split) for the panoramic models.
struct PerfCell {
  const char* model;
  const char* database;
  double plcc;
  double srcc;
};

inline const std::vector<PerfCell>& benchmark_results() {
  static const std::vector<PerfCell> cells = {
      {"MC360IQA", "CVIQ", 0.951, 0.914},
      {"MC360IQA", "OIQA", 0.925, 0.919},
      {"MC360IQA", "MVAQD", 0.555, 0.382},
      {"MC360IQA", "IQA-ODI", 0.812, 0.742},
      {"MC360IQA", "OSIQA", 0.387, 0.275},
      {"MC360IQA", "OIQ-10K", 0.721, 0.71},
      {"MC360IQA", "JUFE-10K", 0.62, 0.62},
      {"Assessor360", "CVIQ", 0.977, 0.964},
      {"Assessor360", "OIQA", 0.975, 0.98},
      {"Assessor360", "MVAQD", 0.972, 0.961},
      {"Assessor360", "IQA-ODI", 0.963, 0.957},
      {"Assessor360", "OSIQA", 0.832, 0.533},
      {"Assessor360", "OIQ-10K", 0.79, 0.773},
      {"Assessor360", "JUFE-10K", 0.694, 0.69},
      {"OIQAND", "CVIQ", 0.976, 0.967},
      {"OIQAND", "OIQA", 0.938, 0.937},
      {"OIQAND", "MVAQD", 0.924, 0.903},
      {"OIQAND", "IQA-ODI", 0.965, 0.927},
      {"OIQAND", "OSIQA", 0.864, 0.821},
      {"OIQAND", "OIQ-10K", 0.755, 0.74},
      {"OIQAND", "JUFE-10K", 0.8, 0.8},
      {"VSFA", "CVIQ", 0.965, 0.953},
      {"VSFA", "OIQA", 0.963, 0.961},
      {"VSFA", "MVAQD", 0.924, 0.932},
      {"VSFA", "IQA-ODI", 0.94, 0.93},
      {"VSFA", "OSIQA", 0.801, 0.742},
      {"VSFA", "OIQ-10K", 0.379, 0.365},
      {"VSFA", "JUFE-10K", 0.793, 0.81},
      {"Trans-VSFA", "CVIQ", 0.965, 0.949},
      {"Trans-VSFA", "OIQA", 0.96, 0.953},
      {"Trans-VSFA", "MVAQD", 0.921, 0.919},
      {"Trans-VSFA", "IQA-ODI", 0.956, 0.929},
      {"Trans-VSFA", "OSIQA", 0.856, 0.704},
      {"Trans-VSFA", "OIQ-10K", 0.112, 0.068},
      {"Trans-VSFA", "JUFE-10K", 0.764, 0.737},
      {"FAST-VQA", "CVIQ", 0.182, 0.362},
      {"FAST-VQA", "OIQA", 0.108, 0.22},
      {"FAST-VQA", "MVAQD", 0.484, 0.532},
      {"FAST-VQA", "IQA-ODI", 0.199, 0.214},
      {"FAST-VQA", "OSIQA", 0.258, 0.317},
      {"FAST-VQA", "OIQ-10K", 0.097, 0.115},
      {"FAST-VQA", "JUFE-10K", 0.075, 0.077},
      {"ResNet-50-P", "CVIQ", 0.98, 0.976},
      {"ResNet-50-P", "OIQA", 0.971, 0.969},
      {"ResNet-50-P", "MVAQD", 0.897, 0.89},
      {"ResNet-50-P", "IQA-ODI", 0.963, 0.93},
      {"ResNet-50-P", "OSIQA", 0.822, 0.675},
      {"ResNet-50-P", "OIQ-10K", 0.808, 0.814},
      {"ResNet-50-P", "JUFE-10K", 0.783, 0.783},
      {"ResNet-152-P", "CVIQ", 0.977, 0.974},
      {"ResNet-152-P", "OIQA", 0.967, 0.967},
      {"ResNet-152-P", "MVAQD", 0.858, 0.854},
      {"ResNet-152-P", "IQA-ODI", 0.957, 0.91},
      {"ResNet-152-P", "OSIQA", 0.73, 0.597},
      {"ResNet-152-P", "OIQ-10K", 0.81, 0.814},
      {"ResNet-152-P", "JUFE-10K", 0.781, 0.782},
      {"Swin-v2-T-P", "CVIQ", 0.974, 0.964},
      {"Swin-v2-T-P", "OIQA", 0.968, 0.967},
      {"Swin-v2-T-P", "MVAQD", 0.907, 0.899},
      {"Swin-v2-T-P", "IQA-ODI", 0.965, 0.929},
      {"Swin-v2-T-P", "OSIQA", 0.818, 0.727},
      {"Swin-v2-T-P", "OIQ-10K", 0.797, 0.797},
      {"Swin-v2-T-P", "JUFE-10K", 0.737, 0.73},
      {"Swin-v2-B-P", "CVIQ", 0.976, 0.968},
      {"Swin-v2-B-P", "OIQA", 0.955, 0.953},
      {"Swin-v2-B-P", "MVAQD", 0.924, 0.908},
      {"Swin-v2-B-P", "IQA-ODI", 0.968, 0.926},
      {"Swin-v2-B-P", "OSIQA", 0.818, 0.727},
      {"Swin-v2-B-P", "OIQ-10K", 0.78, 0.774},
      {"Swin-v2-B-P", "JUFE-10K", 0.551, 0.517},
      {"MaxViT-T-P", "CVIQ", 0.984, 0.98},
      {"MaxViT-T-P", "OIQA", 0.952, 0.953},
      {"MaxViT-T-P", "MVAQD", 0.944, 0.936},
      {"MaxViT-T-P", "IQA-ODI", 0.967, 0.923},
      {"MaxViT-T-P", "OSIQA", 0.814, 0.665},
      {"MaxViT-T-P", "OIQ-10K", 0.808, 0.808},
      {"MaxViT-T-P", "JUFE-10K", 0.771, 0.77},
      {"HyperIQA", "CVIQ", 0.973, 0.96},
      {"HyperIQA", "OIQA", 0.97, 0.968},
      {"HyperIQA", "MVAQD", 0.822, 0.817},
      {"HyperIQA", "IQA-ODI", 0.929, 0.887},
      {"HyperIQA", "OSIQA", 0.717, 0.82},
      {"HyperIQA", "OIQ-10K", 0.802, 0.805},
      {"HyperIQA", "JUFE-10K", 0.763, 0.763},
      {"MANIQA", "CVIQ", 0.981, 0.973},
      {"MANIQA", "OIQA", 0.963, 0.962},
      {"MANIQA", "MVAQD", 0.965, 0.959},
      {"MANIQA", "IQA-ODI", 0.967, 0.933},
      {"MANIQA", "OSIQA", 0.35, 0.411},
      {"MANIQA", "OIQ-10K", 0.821, 0.822},
      {"MANIQA", "JUFE-10K", 0.749, 0.747},
      {"VCRNet", "CVIQ", 0.83, 0.866},
      {"VCRNet", "OIQA", 0.88, 0.884},
      {"VCRNet", "MVAQD", 0.843, 0.862},
      {"VCRNet", "IQA-ODI", 0.738, 0.819},
      {"VCRNet", "OSIQA", 0.307, 0.356},
      {"VCRNet", "OIQ-10K", 0.803, 0.751},
      {"VCRNet", "JUFE-10K", 0.737, 0.712},
      {"QualiCLIP", "CVIQ", 0.982, 0.978},
      {"QualiCLIP", "OIQA", 0.883, 0.878},
      {"QualiCLIP", "MVAQD", 0.85, 0.843},
      {"QualiCLIP", "IQA-ODI", 0.987, 0.981},
      {"QualiCLIP", "OSIQA", 0.572, 0.604},
      {"QualiCLIP", "OIQ-10K", 0.414, 0.395},
      {"QualiCLIP", "JUFE-10K", 0.318, 0.211},
  };
  return cells;
}

inline const PerfCell* find_benchmark(const std::string& model, const std::string& database) {
  for (const PerfCell& c : benchmark_results())
    if (model == c.model && database == c.database) return &c;
  return nullptr;
}

/// Cross-database transfer, models trained on CVIQ. p_ori repeats the
/// model's in-domain CVIQ result.
struct GainCell {
  const char* model;
  const char* target;
  Metric metric;
  double p_ori;
  double p_test;
  double printed_gain;  // percent
};

inline const std::vector<GainCell>& cviq_transfer_gains() {
  static const std::vector<GainCell> cells = {
      {"MC360IQA", "OIQA", Metric::Plcc, 0.951, 0.424, -55.4},
      {"MC360IQA", "OIQA", Metric::Srcc, 0.914, 0.386, -57.8},
      {"MC360IQA", "MVAQD", Metric::Plcc, 0.951, 0.229, -75.9},
      {"MC360IQA", "MVAQD", Metric::Srcc, 0.914, 0.163, -82.2},
      {"MC360IQA", "IQA-ODI", Metric::Plcc, 0.951, 0.812, -14.6},
      {"MC360IQA", "IQA-ODI", Metric::Srcc, 0.914, 0.658, -28},
      {"MC360IQA", "OSIQA", Metric::Plcc, 0.951, 0.106, -88.9},
      {"MC360IQA", "OSIQA", Metric::Srcc, 0.914, 0.132, -85.6},
      {"MC360IQA", "OIQ-10K", Metric::Plcc, 0.951, 0.347, -63.5},
      {"MC360IQA", "OIQ-10K", Metric::Srcc, 0.914, 0.279, -69.5},
      {"MC360IQA", "JUFE-10K", Metric::Plcc, 0.951, 0.031, -96.7},
      {"MC360IQA", "JUFE-10K", Metric::Srcc, 0.914, 0.028, -96.9},
      {"Assessor360", "OIQA", Metric::Plcc, 0.977, 0.542, -44.5},
      {"Assessor360", "OIQA", Metric::Srcc, 0.964, 0.463, -52},
      {"Assessor360", "MVAQD", Metric::Plcc, 0.977, 0.629, -35.6},
      {"Assessor360", "MVAQD", Metric::Srcc, 0.964, 0.564, -41.5},
      {"Assessor360", "IQA-ODI", Metric::Plcc, 0.977, 0.905, -7.4},
      {"Assessor360", "IQA-ODI", Metric::Srcc, 0.964, 0.86, -10.8},
      {"Assessor360", "OSIQA", Metric::Plcc, 0.977, 0.171, -82.5},
      {"Assessor360", "OSIQA", Metric::Srcc, 0.964, 0.125, -87},
      {"Assessor360", "OIQ-10K", Metric::Plcc, 0.977, 0.43, -56},
      {"Assessor360", "OIQ-10K", Metric::Srcc, 0.964, 0.336, -65.1},
      {"Assessor360", "JUFE-10K", Metric::Plcc, 0.977, 0.071, -92.7},  // adjusted
      {"Assessor360", "JUFE-10K", Metric::Srcc, 0.964, 0.061, -93.7},  // adjusted
      {"OIQAND", "OIQA", Metric::Plcc, 0.976, 0.636, -34.8},
      {"OIQAND", "OIQA", Metric::Srcc, 0.967, 0.615, -36.4},
      {"OIQAND", "MVAQD", Metric::Plcc, 0.976, 0.605, -38},
      {"OIQAND", "MVAQD", Metric::Srcc, 0.967, 0.494, -48.9},
      {"OIQAND", "IQA-ODI", Metric::Plcc, 0.976, 0.776, -20.5},
      {"OIQAND", "IQA-ODI", Metric::Srcc, 0.967, 0.562, -41.9},
      {"OIQAND", "OSIQA", Metric::Plcc, 0.976, 0.214, -78.1},
      {"OIQAND", "OSIQA", Metric::Srcc, 0.967, 0.151, -84.4},
      {"OIQAND", "OIQ-10K", Metric::Plcc, 0.976, 0.296, -69.7},
      {"OIQAND", "OIQ-10K", Metric::Srcc, 0.967, 0.142, -85.3},
      {"OIQAND", "JUFE-10K", Metric::Plcc, 0.976, 0.013, -98.7},
      {"OIQAND", "JUFE-10K", Metric::Srcc, 0.967, 0.002, -99.8},
      {"ResNet-50-P", "OIQA", Metric::Plcc, 0.98, 0.679, -30.7},
      {"ResNet-50-P", "OIQA", Metric::Srcc, 0.976, 0.662, -32.2},
      {"ResNet-50-P", "MVAQD", Metric::Plcc, 0.98, 0.385, -60.7},
      {"ResNet-50-P", "MVAQD", Metric::Srcc, 0.976, 0.356, -63.5},
      {"ResNet-50-P", "IQA-ODI", Metric::Plcc, 0.98, 0.824, -15.9},
      {"ResNet-50-P", "IQA-ODI", Metric::Srcc, 0.976, 0.712, -27},
      {"ResNet-50-P", "OSIQA", Metric::Plcc, 0.98, 0.225, -77},
      {"ResNet-50-P", "OSIQA", Metric::Srcc, 0.976, 0.292, -70.1},
      {"ResNet-50-P", "OIQ-10K", Metric::Plcc, 0.98, 0.327, -66.6},
      {"ResNet-50-P", "OIQ-10K", Metric::Srcc, 0.976, 0.25, -74.4},
      {"ResNet-50-P", "JUFE-10K", Metric::Plcc, 0.98, 0.064, -93.5},
      {"ResNet-50-P", "JUFE-10K", Metric::Srcc, 0.976, 0.051, -94.8},
      {"ResNet-152-P", "OIQA", Metric::Plcc, 0.977, 0.702, -28.1},
      {"ResNet-152-P", "OIQA", Metric::Srcc, 0.974, 0.685, -29.7},
      {"ResNet-152-P", "MVAQD", Metric::Plcc, 0.977, 0.577, -40.9},
      {"ResNet-152-P", "MVAQD", Metric::Srcc, 0.974, 0.553, -43.2},
      {"ResNet-152-P", "IQA-ODI", Metric::Plcc, 0.977, 0.835, -14.5},
      {"ResNet-152-P", "IQA-ODI", Metric::Srcc, 0.974, 0.765, -21.5},
      {"ResNet-152-P", "OSIQA", Metric::Plcc, 0.977, 0.142, -85.5},
      {"ResNet-152-P", "OSIQA", Metric::Srcc, 0.974, 0.144, -85.2},
      {"ResNet-152-P", "OIQ-10K", Metric::Plcc, 0.977, 0.397, -59.4},
      {"ResNet-152-P", "OIQ-10K", Metric::Srcc, 0.974, 0.262, -73.1},
      {"ResNet-152-P", "JUFE-10K", Metric::Plcc, 0.977, 0.054, -94.5},
      {"ResNet-152-P", "JUFE-10K", Metric::Srcc, 0.974, 0.046, -95.3},
      {"Swin-v2-T-P", "OIQA", Metric::Plcc, 0.974, 0.792, -18.7},
      {"Swin-v2-T-P", "OIQA", Metric::Srcc, 0.964, 0.78, -19.1},
      {"Swin-v2-T-P", "MVAQD", Metric::Plcc, 0.974, 0.792, -18.7},
      {"Swin-v2-T-P", "MVAQD", Metric::Srcc, 0.964, 0.736, -23.7},
      {"Swin-v2-T-P", "IQA-ODI", Metric::Plcc, 0.974, 0.878, -9.9},
      {"Swin-v2-T-P", "IQA-ODI", Metric::Srcc, 0.964, 0.796, -17.4},
      {"Swin-v2-T-P", "OSIQA", Metric::Plcc, 0.974, 0.013, -98.7},
      {"Swin-v2-T-P", "OSIQA", Metric::Srcc, 0.964, 0.025, -97.4},
      {"Swin-v2-T-P", "OIQ-10K", Metric::Plcc, 0.974, 0.438, -55},
      {"Swin-v2-T-P", "OIQ-10K", Metric::Srcc, 0.964, 0.331, -65.7},
      {"Swin-v2-T-P", "JUFE-10K", Metric::Plcc, 0.974, 0.167, -82.9},
      {"Swin-v2-T-P", "JUFE-10K", Metric::Srcc, 0.964, 0.149, -84.5},
      {"Swin-v2-B-P", "OIQA", Metric::Plcc, 0.976, 0.777, -20.4},
      {"Swin-v2-B-P", "OIQA", Metric::Srcc, 0.968, 0.773, -20.1},
      {"Swin-v2-B-P", "MVAQD", Metric::Plcc, 0.976, 0.526, -46.1},
      {"Swin-v2-B-P", "MVAQD", Metric::Srcc, 0.968, 0.456, -52.9},
      {"Swin-v2-B-P", "IQA-ODI", Metric::Plcc, 0.976, 0.836, -14.3},
      {"Swin-v2-B-P", "IQA-ODI", Metric::Srcc, 0.968, 0.682, -29.5},
      {"Swin-v2-B-P", "OSIQA", Metric::Plcc, 0.976, 0.268, -72.5},
      {"Swin-v2-B-P", "OSIQA", Metric::Srcc, 0.968, 0.223, -77},
      {"Swin-v2-B-P", "OIQ-10K", Metric::Plcc, 0.976, 0.443, -54.6},
      {"Swin-v2-B-P", "OIQ-10K", Metric::Srcc, 0.968, 0.371, -61.7},
      {"Swin-v2-B-P", "JUFE-10K", Metric::Plcc, 0.976, 0.208, -78.7},
      {"Swin-v2-B-P", "JUFE-10K", Metric::Srcc, 0.968, 0.198, -79.5},
      {"MaxViT-T-P", "OIQA", Metric::Plcc, 0.984, 0.636, -35.4},
      {"MaxViT-T-P", "OIQA", Metric::Srcc, 0.98, 0.603, -38.5},
      {"MaxViT-T-P", "MVAQD", Metric::Plcc, 0.984, 0.582, -40.9},
      {"MaxViT-T-P", "MVAQD", Metric::Srcc, 0.98, 0.553, -43.6},
      {"MaxViT-T-P", "IQA-ODI", Metric::Plcc, 0.984, 0.893, -9.2},
      {"MaxViT-T-P", "IQA-ODI", Metric::Srcc, 0.98, 0.836, -14.7},
      {"MaxViT-T-P", "OSIQA", Metric::Plcc, 0.984, 0.234, -76.2},
      {"MaxViT-T-P", "OSIQA", Metric::Srcc, 0.98, 0.281, -71.3},
      {"MaxViT-T-P", "OIQ-10K", Metric::Plcc, 0.984, 0.401, -59.2},
      {"MaxViT-T-P", "OIQ-10K", Metric::Srcc, 0.98, 0.23, -76.5},
      {"MaxViT-T-P", "JUFE-10K", Metric::Plcc, 0.984, 0.053, -94.6},
      {"MaxViT-T-P", "JUFE-10K", Metric::Srcc, 0.98, 0.048, -95.1},
  };
  return cells;
}

/// Printed per-target mean gains for every training source.
struct MeanGainCell {
  const char* source;
  const char* target;
  Metric metric;
  double printed;  // percent
};

inline const std::vector<MeanGainCell>& transfer_mean_gains() {
  static const std::vector<MeanGainCell> cells = {
      {"CVIQ", "OIQA", Metric::Plcc, -33.5},
      {"CVIQ", "OIQA", Metric::Srcc, -35.7},
      {"CVIQ", "MVAQD", Metric::Plcc, -44.6},
      {"CVIQ", "MVAQD", Metric::Srcc, -49.9},
      {"CVIQ", "IQA-ODI", Metric::Plcc, -13.3},
      {"CVIQ", "IQA-ODI", Metric::Srcc, -23.9},
      {"CVIQ", "OSIQA", Metric::Plcc, -82.4},
      {"CVIQ", "OSIQA", Metric::Srcc, -82.2},
      {"CVIQ", "OIQ-10K", Metric::Plcc, -60.5},
      {"CVIQ", "OIQ-10K", Metric::Srcc, -71.4},
      {"CVIQ", "JUFE-10K", Metric::Plcc, -91.5},
      {"CVIQ", "JUFE-10K", Metric::Srcc, -92.5},
      {"OIQA", "CVIQ", Metric::Plcc, -4.3},
      {"OIQA", "CVIQ", Metric::Srcc, -6.1},
      {"OIQA", "MVAQD", Metric::Plcc, -25.2},
      {"OIQA", "MVAQD", Metric::Srcc, -28.2},
      {"OIQA", "IQA-ODI", Metric::Plcc, -12.9},
      {"OIQA", "IQA-ODI", Metric::Srcc, -24},
      {"OIQA", "OSIQA", Metric::Plcc, -82.5},
      {"OIQA", "OSIQA", Metric::Srcc, -87.5},
      {"OIQA", "OIQ-10K", Metric::Plcc, -41.1},
      {"OIQA", "OIQ-10K", Metric::Srcc, -48.2},
      {"OIQA", "JUFE-10K", Metric::Plcc, -82.4},
      {"OIQA", "JUFE-10K", Metric::Srcc, -84.4},
      {"MVAQD", "CVIQ", Metric::Plcc, -21.5},
      {"MVAQD", "CVIQ", Metric::Srcc, -16.8},
      {"MVAQD", "OIQA", Metric::Plcc, -19},
      {"MVAQD", "OIQA", Metric::Srcc, -18.2},
      {"MVAQD", "IQA-ODI", Metric::Plcc, -17.2},
      {"MVAQD", "IQA-ODI", Metric::Srcc, -20.1},
      {"MVAQD", "OSIQA", Metric::Plcc, -84.7},
      {"MVAQD", "OSIQA", Metric::Srcc, -85.2},
      {"MVAQD", "OIQ-10K", Metric::Plcc, -48.4},
      {"MVAQD", "OIQ-10K", Metric::Srcc, -57.9},
      {"MVAQD", "JUFE-10K", Metric::Plcc, -93},
      {"MVAQD", "JUFE-10K", Metric::Srcc, -93.2},
      {"IQA-ODI", "CVIQ", Metric::Plcc, -17.3},
      {"IQA-ODI", "CVIQ", Metric::Srcc, -17.1},
      {"IQA-ODI", "OIQA", Metric::Plcc, -56.8},
      {"IQA-ODI", "OIQA", Metric::Srcc, -70},
      {"IQA-ODI", "MVAQD", Metric::Plcc, -40.7},
      {"IQA-ODI", "MVAQD", Metric::Srcc, -47.7},
      {"IQA-ODI", "OSIQA", Metric::Plcc, -81.2},
      {"IQA-ODI", "OSIQA", Metric::Srcc, -79.7},
      {"IQA-ODI", "OIQ-10K", Metric::Plcc, -59},
      {"IQA-ODI", "OIQ-10K", Metric::Srcc, -68.2},
      {"IQA-ODI", "JUFE-10K", Metric::Plcc, -93.5},
      {"IQA-ODI", "JUFE-10K", Metric::Srcc, -95.3},
      {"OSIQA", "CVIQ", Metric::Plcc, -71.5},
      {"OSIQA", "CVIQ", Metric::Srcc, -71.6},
      {"OSIQA", "OIQA", Metric::Plcc, -75.6},
      {"OSIQA", "OIQA", Metric::Srcc, -73.9},
      {"OSIQA", "MVAQD", Metric::Plcc, -79.1},
      {"OSIQA", "MVAQD", Metric::Srcc, -70.3},
      {"OSIQA", "IQA-ODI", Metric::Plcc, -80.7},
      {"OSIQA", "IQA-ODI", Metric::Srcc, -78},
      {"OSIQA", "OIQ-10K", Metric::Plcc, -90},
      {"OSIQA", "OIQ-10K", Metric::Srcc, -88.8},
      {"OSIQA", "JUFE-10K", Metric::Plcc, -92.2},
      {"OSIQA", "JUFE-10K", Metric::Srcc, -91.1},
      {"OIQ-10K", "CVIQ", Metric::Plcc, -1.1},
      {"OIQ-10K", "CVIQ", Metric::Srcc, 2.5},
      {"OIQ-10K", "OIQA", Metric::Plcc, 12.7},
      {"OIQ-10K", "OIQA", Metric::Srcc, 12.3},
      {"OIQ-10K", "MVAQD", Metric::Plcc, -7.6},
      {"OIQ-10K", "MVAQD", Metric::Srcc, -12.4},
      {"OIQ-10K", "IQA-ODI", Metric::Plcc, -9.1},
      {"OIQ-10K", "IQA-ODI", Metric::Srcc, -21.1},
      {"OIQ-10K", "OSIQA", Metric::Plcc, -87.2},
      {"OIQ-10K", "OSIQA", Metric::Srcc, -90.4},
      {"OIQ-10K", "JUFE-10K", Metric::Plcc, -29.1},
      {"OIQ-10K", "JUFE-10K", Metric::Srcc, -31.9},
      {"JUFE-10K", "CVIQ", Metric::Plcc, -23.3},
      {"JUFE-10K", "CVIQ", Metric::Srcc, -19.6},
      {"JUFE-10K", "OIQA", Metric::Plcc, -33.1},
      {"JUFE-10K", "OIQA", Metric::Srcc, -38.7},
      {"JUFE-10K", "MVAQD", Metric::Plcc, -37.1},
      {"JUFE-10K", "MVAQD", Metric::Srcc, -57.3},
      {"JUFE-10K", "IQA-ODI", Metric::Plcc, -73.9},
      {"JUFE-10K", "IQA-ODI", Metric::Srcc, -79.1},
      {"JUFE-10K", "OSIQA", Metric::Plcc, -74.8},
      {"JUFE-10K", "OSIQA", Metric::Srcc, -81.5},
      {"JUFE-10K", "OIQ-10K", Metric::Plcc, -36.8},
      {"JUFE-10K", "OIQ-10K", Metric::Srcc, -35.7},
  };
  return cells;
}

/// Results of models trained per database and tested on the generated
/// (in-the-wild) image set, plus the printed per-database mean row.
inline const std::vector<PerfCell>& wild_test_results() {
  static const std::vector<PerfCell> cells = {
      {"MC360IQA", "CVIQ", 0.259, 0.254},
      {"MC360IQA", "OIQA", 0.603, 0.534},
      {"MC360IQA", "MVAQD", 0.116, 0.023},
      {"MC360IQA", "IQA-ODI", 0.213, 0.222},
      {"MC360IQA", "OSIQA", 0.203, 0.136},
      {"MC360IQA", "OIQ-10K", 0.55, 0.518},
      {"MC360IQA", "JUFE-10K", 0.393, 0.378},
      {"Assessor360", "CVIQ", 0.249, 0.218},
      {"Assessor360", "OIQA", 0.608, 0.555},
      {"Assessor360", "MVAQD", 0.638, 0.596},
      {"Assessor360", "IQA-ODI", 0.188, 0.14},
      {"Assessor360", "OSIQA", 0.196, 0.213},
      {"Assessor360", "OIQ-10K", 0.687, 0.682},
      {"Assessor360", "JUFE-10K", 0.13, 0.132},
      {"OIQAND", "CVIQ", 0.196, 0.225},
      {"OIQAND", "OIQA", 0.555, 0.486},
      {"OIQAND", "MVAQD", 0.719, 0.715},
      {"OIQAND", "IQA-ODI", 0.219, 0.155},
      {"OIQAND", "OSIQA", 0.188, 0.196},
      {"OIQAND", "OIQ-10K", 0.587, 0.581},
      {"OIQAND", "JUFE-10K", 0.523, 0.537},
      {"ResNet-50-P", "CVIQ", 0.509, 0.498},
      {"ResNet-50-P", "OIQA", 0.532, 0.467},
      {"ResNet-50-P", "MVAQD", 0.593, 0.573},
      {"ResNet-50-P", "IQA-ODI", 0.286, 0.143},
      {"ResNet-50-P", "OSIQA", 0.126, 0.088},
      {"ResNet-50-P", "OIQ-10K", 0.678, 0.667},
      {"ResNet-50-P", "JUFE-10K", 0.417, 0.447},
      {"ResNet-152-P", "CVIQ", 0.502, 0.42},
      {"ResNet-152-P", "OIQA", 0.564, 0.56},
      {"ResNet-152-P", "MVAQD", 0.482, 0.483},
      {"ResNet-152-P", "IQA-ODI", 0.245, -0.006},
      {"ResNet-152-P", "OSIQA", 0.236, 0.019},
      {"ResNet-152-P", "OIQ-10K", 0.724, 0.736},
      {"ResNet-152-P", "JUFE-10K", 0.525, 0.543},
      {"Swin-v2-T-P", "CVIQ", 0.308, 0.272},
      {"Swin-v2-T-P", "OIQA", 0.62, 0.594},
      {"Swin-v2-T-P", "MVAQD", 0.708, 0.704},
      {"Swin-v2-T-P", "IQA-ODI", 0.211, 0.183},
      {"Swin-v2-T-P", "OSIQA", 0.02, 0.042},
      {"Swin-v2-T-P", "OIQ-10K", 0.686, 0.676},
      {"Swin-v2-T-P", "JUFE-10K", 0.378, 0.412},
      {"Swin-v2-B-P", "CVIQ", 0.381, 0.193},
      {"Swin-v2-B-P", "OIQA", 0.641, 0.639},
      {"Swin-v2-B-P", "MVAQD", 0.7, 0.683},
      {"Swin-v2-B-P", "IQA-ODI", 0.142, -0.045},
      {"Swin-v2-B-P", "OSIQA", 0.211, 0.133},
      {"Swin-v2-B-P", "OIQ-10K", 0.672, 0.668},
      {"Swin-v2-B-P", "JUFE-10K", 0.359, 0.396},
      {"MaxViT-T-P", "CVIQ", 0.486, 0.448},
      {"MaxViT-T-P", "OIQA", 0.516, 0.483},
      {"MaxViT-T-P", "MVAQD", 0.755, 0.777},
      {"MaxViT-T-P", "IQA-ODI", 0.232, 0.195},
      {"MaxViT-T-P", "OSIQA", 0.15, 0.115},
      {"MaxViT-T-P", "OIQ-10K", 0.672, 0.68},
      {"MaxViT-T-P", "JUFE-10K", 0.454, 0.446},
  };
  return cells;
}

struct WildMeanCell {
  const char* database;
  double plcc;
  double srcc;
};

inline const std::vector<WildMeanCell>& wild_test_means() {
  static const std::vector<WildMeanCell> cells = {
      {"CVIQ", 0.361, 0.316},
      {"OIQA", 0.58, 0.54},
      {"MVAQD", 0.589, 0.569},
      {"IQA-ODI", 0.217, 0.123},
      {"OSIQA", 0.166, 0.118},
      {"OIQ-10K", 0.657, 0.651},
      {"JUFE-10K", 0.397, 0.393},
  };
  return cells;
}

/// Published per-perspective database ranking columns and the final column.
struct RankRow {
  const char* database;
  int q1;
  int q2;
  int q3;
  int t;
  int final_rank;
};

inline const std::vector<RankRow>& global_ranking() {
  static const std::vector<RankRow> rows = {
      {"OIQ-10K", 4, 2, 1, 1, 1},
      {"JUFE-10K", 2, 1, 4, 4, 2},
      {"MVAQD", 5, 4, 3, 3, 3},
      {"OIQA", 6, 6, 2, 2, 4},
      {"OSIQA", 1, 3, 7, 7, 5},
      {"IQA-ODI", 3, 5, 6, 6, 6},
      {"CVIQ", 7, 7, 5, 5, 7},
  };
  return rows;
}

}  // namespace panobench::fixtures
