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
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "panobench/errors.hpp"
#include "panobench/features.hpp"
#include "panobench/image.hpp"

namespace panobench {

inline constexpr int kScorerSchemaVersion = 1;

/// Per-dimension z-score normalizer fitted on training data. Dimensions with
/// zero variance keep std 1 and are neutralized by a zero weight.
struct FeatureNormalizer {
  std::array<double, kFeatureDim> means{};
  std::array<double, kFeatureDim> stds{{1, 1, 1, 1, 1}};

  FeatureVector apply(const FeatureVector& f) const {
    FeatureVector out;
    for (int k = 0; k < kFeatureDim; ++k) out[k] = (f[k] - means[k]) / stds[k];
    return out;
  }
};

/// Linear projection of normalized features plus bias.
struct LinearScorer {
  std::array<double, kFeatureDim> weights{};
  double bias = 0.0;
  FeatureNormalizer normalizer;
};

inline double score_viewport(const LinearScorer& s, const FeatureVector& f) {
  const FeatureVector z = s.normalizer.apply(f);
  double acc = s.bias;
  for (int k = 0; k < kFeatureDim; ++k) acc += s.weights[k] * z[k];
  return acc;
}

/// Average pooling of per-viewport scores.
inline double pool_scores(const std::vector<double>& scores) {
  if (scores.empty()) throw std::invalid_argument("pool_scores: empty score list");
  double s = 0.0;
  for (double v : scores) s += v;
  return s / static_cast<double>(scores.size());
}

inline FeatureVector mean_feature(const std::vector<FeatureVector>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean_feature: empty feature list");
  FeatureVector m{};
  for (const FeatureVector& x : xs)
    for (int k = 0; k < kFeatureDim; ++k) m[k] += x[k];
  for (int k = 0; k < kFeatureDim; ++k) m[k] /= static_cast<double>(xs.size());
  return m;
}

struct TrainingExample {
  std::vector<FeatureVector> viewport_features;
  double mos = 0.0;
};

/// Ridge-regularized least squares (lambda on the normalized feature block,
/// intercept unpenalized) mapping the viewport-mean feature vector to MOS.
inline LinearScorer train_linear_scorer(const std::vector<TrainingExample>& examples,
                                        double lambda = 1e-3) {
  const int n = static_cast<int>(examples.size());
  if (n < kFeatureDim + 1)
    throw ConfigError("train_linear_scorer: needs at least " +
                      std::to_string(kFeatureDim + 1) + " training images, got " +
                      std::to_string(n));

  std::vector<FeatureVector> x(n);
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = mean_feature(examples[i].viewport_features);
    y[i] = examples[i].mos;
    if (!std::isfinite(y[i])) throw DataError("train_linear_scorer: non-finite MOS");
  }

  LinearScorer s;
  std::array<bool, kFeatureDim> live{};
  for (int k = 0; k < kFeatureDim; ++k) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) m += x[i][k];
    m /= n;
    double var = 0.0;
    for (int i = 0; i < n; ++i) var += (x[i][k] - m) * (x[i][k] - m);
    var /= n;
    s.normalizer.means[k] = m;
    live[k] = var > 1e-24;
    s.normalizer.stds[k] = live[k] ? std::sqrt(var) : 1.0;
  }

  double mean_y = 0.0;
  for (double v : y) mean_y += v;
  mean_y /= n;

  // Normal equations on the z-scored block; centered target makes the
  // intercept separable.
  Eigen::MatrixXd z(n, kFeatureDim);
  Eigen::VectorXd t(n);
  for (int i = 0; i < n; ++i) {
    const FeatureVector zi = s.normalizer.apply(x[i]);
    for (int k = 0; k < kFeatureDim; ++k) z(i, k) = live[k] ? zi[k] : 0.0;
    t(i) = y[i] - mean_y;
  }
  const Eigen::MatrixXd gram =
      z.transpose() * z + lambda * Eigen::MatrixXd::Identity(kFeatureDim, kFeatureDim);
  const Eigen::VectorXd w = gram.ldlt().solve(z.transpose() * t);

  for (int k = 0; k < kFeatureDim; ++k) s.weights[k] = live[k] ? w(k) : 0.0;
  s.bias = mean_y;
  return s;
}

inline nlohmann::json scorer_to_json(const LinearScorer& s) {
  nlohmann::json j;
  j["version"] = kScorerSchemaVersion;
  j["feature_names"] = feature_names();
  j["normalizer"]["means"] = s.normalizer.means;
  j["normalizer"]["stds"] = s.normalizer.stds;
  j["weights"] = s.weights;
  j["bias"] = s.bias;
  return j;
}

inline LinearScorer scorer_from_json(const nlohmann::json& j) {
  if (!j.contains("version") || j["version"].get<int>() != kScorerSchemaVersion)
    throw ConfigError("scorer document: unknown version");
  LinearScorer s;
  const auto names = j.at("feature_names").get<std::vector<std::string>>();
  if (names.size() != kFeatureDim)
    throw ConfigError("scorer document: feature dimension mismatch");
  for (int k = 0; k < kFeatureDim; ++k)
    if (names[k] != feature_names()[k])
      throw ConfigError("scorer document: unexpected feature '" + names[k] + "'");
  j.at("normalizer").at("means").get_to(s.normalizer.means);
  j.at("normalizer").at("stds").get_to(s.normalizer.stds);
  for (double v : s.normalizer.stds)
    if (!(v > 0.0)) throw ConfigError("scorer document: normalizer stds must be positive");
  j.at("weights").get_to(s.weights);
  s.bias = j.at("bias").get<double>();
  return s;
}

inline void save_scorer(const LinearScorer& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write scorer file: " + path);
  out << scorer_to_json(s).dump(2) << '\n';
}

inline LinearScorer load_scorer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read scorer file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("scorer file " + path + ": " + e.what());
  }
  return scorer_from_json(j);
}

// --------------------------------------------------------------------------
// Inter-viewport interaction: sigmoid recurrence over the feature sequence.

/// h_t = sigmoid(W_h h_{t-1} + W_x x_t + b). Matrices are dim x dim,
/// row-major; the scalar profile scales the identity.
struct RecurrentAggregator {
  int dim = 0;
  std::vector<double> w_h;
  std::vector<double> w_x;
  std::vector<double> bias;
  std::vector<double> initial_state;

  static RecurrentAggregator scalar_profile(int dim, double wh, double wx, double b) {
    RecurrentAggregator a;
    a.dim = dim;
    a.w_h.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    a.w_x.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int k = 0; k < dim; ++k) {
      a.w_h[static_cast<std::size_t>(k) * dim + k] = wh;
      a.w_x[static_cast<std::size_t>(k) * dim + k] = wx;
    }
    a.bias.assign(dim, b);
    a.initial_state.assign(dim, 0.0);
    return a;
  }

  /// Recency profile used when no learned recurrence is available.
  static RecurrentAggregator default_profile(int dim) {
    return scalar_profile(dim, 0.5, 1.0, 0.0);
  }
};

/// Saturation is capped to the nearest representable values inside (0, 1)
/// so state entries keep the open-interval invariant for any finite input.
inline double sigmoid(double v) {
  const double s = 1.0 / (1.0 + std::exp(-v));
  if (s <= 0.0) return std::numeric_limits<double>::denorm_min();
  if (s >= 1.0) return std::nextafter(1.0, 0.0);
  return s;
}

/// Folds the sequence and returns the final hidden state h_M. Every state
/// entry lies strictly in (0, 1) for finite inputs.
inline std::vector<double> aggregate_recurrent(const RecurrentAggregator& agg,
                                               const std::vector<std::vector<double>>& xs) {
  if (xs.empty()) throw std::invalid_argument("aggregate_recurrent: empty sequence");
  const int d = agg.dim;
  const auto dd = static_cast<std::size_t>(d) * d;
  if (agg.w_h.size() != dd || agg.w_x.size() != dd ||
      agg.bias.size() != static_cast<std::size_t>(d) ||
      agg.initial_state.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("aggregate_recurrent: inconsistent aggregator shapes");

  std::vector<double> h = agg.initial_state;
  std::vector<double> next(d);
  for (const std::vector<double>& x : xs) {
    if (x.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("aggregate_recurrent: input dimension mismatch");
    for (int r = 0; r < d; ++r) {
      double acc = agg.bias[r];
      const double* wh = agg.w_h.data() + static_cast<std::size_t>(r) * d;
      const double* wx = agg.w_x.data() + static_cast<std::size_t>(r) * d;
      for (int c = 0; c < d; ++c) acc += wh[c] * h[c] + wx[c] * x[c];
      next[r] = sigmoid(acc);
    }
    h = next;
  }
  return h;
}

inline std::vector<std::vector<double>> to_sequences(const std::vector<FeatureVector>& xs) {
  std::vector<std::vector<double>> out;
  out.reserve(xs.size());
  for (const FeatureVector& x : xs) out.emplace_back(x.begin(), x.end());
  return out;
}

/// Integrated mapping: linear head on the recurrent state.
inline double score_integrated(const std::vector<double>& head_weights, double head_bias,
                               const RecurrentAggregator& agg,
                               const std::vector<std::vector<double>>& xs) {
  const std::vector<double> h = aggregate_recurrent(agg, xs);
  if (head_weights.size() != h.size())
    throw std::invalid_argument("score_integrated: head dimension mismatch");
  double s = head_bias;
  for (std::size_t k = 0; k < h.size(); ++k) s += head_weights[k] * h[k];
  return s;
}

// --------------------------------------------------------------------------
// Fixed reference scorers.

inline constexpr double kReportDbCap = 100.0;

inline double capped_db(double db) { return std::min(db, kReportDbCap); }

/// log(1 + Laplacian variance), averaged over viewports. Monotone under blur.
inline double score_sharpness(const std::vector<Viewport>& vps) {
  std::vector<double> per;
  per.reserve(vps.size());
  for (const Viewport& vp : vps) per.push_back(std::log1p(extract_features(vp)[2]));
  return pool_scores(per);
}

/// Median absolute deviation of the Laplacian residual, sign-flipped so that
/// noisier viewports score lower. Averaged over viewports.
inline double score_noise_mad(const std::vector<Viewport>& vps) {
  auto median_of = [](std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) {
      std::nth_element(v.begin(), v.begin() + mid - 1, v.end());
      m = (m + v[mid - 1]) / 2.0;
    }
    return m;
  };
  std::vector<double> per;
  per.reserve(vps.size());
  for (const Viewport& vp : vps) {
    const std::vector<double> lum = luminance_plane(vp);
    std::vector<double> lap = laplacian_response(lum, vp.width, vp.height);
    const double med = median_of(lap);
    for (double& r : lap) r = std::abs(r - med);
    per.push_back(-median_of(lap));
  }
  return pool_scores(per);
}

/// PSNR between two equally sized viewports; +inf for identical rasters.
inline double viewport_psnr(const Viewport& a, const Viewport& b) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument("viewport_psnr: size mismatch");
  double mse = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const double d = static_cast<double>(a.data[i]) - static_cast<double>(b.data[i]);
    mse += d * d;
  }
  mse /= static_cast<double>(a.data.size());
  if (mse <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

/// Mean per-viewport PSNR against reference viewports, capped for reporting.
inline double score_vp_psnr(const std::vector<Viewport>& test,
                            const std::vector<Viewport>& reference) {
  if (test.size() != reference.size() || test.empty())
    throw ConfigError("vp-psnr: test and reference viewport lists must match");
  std::vector<double> per;
  per.reserve(test.size());
  for (std::size_t m = 0; m < test.size(); ++m)
    per.push_back(capped_db(viewport_psnr(test[m], reference[m])));
  return pool_scores(per);
}

/// PSNR with per-row cosine-latitude weights w(j) = cos((j + 0.5 - H/2) pi/H)
/// compensating equirectangular oversampling near the poles. Returns +inf for
/// identical rasters; report paths cap at 100 dB. The plane overload takes
/// interleaved RGB samples in [0, 255] at any precision.
inline double ws_psnr_planes(const std::vector<double>& x, const std::vector<double>& y,
                             int w, int h) {
  if (x.size() != y.size() || x.size() != static_cast<std::size_t>(w) * h * kChannels)
    throw ConfigError("ws-psnr: sample buffer size mismatch");
  double weight_sum = 0.0, acc = 0.0;
  for (int j = 0; j < h; ++j) {
    const double wj = std::cos((j + 0.5 - h / 2.0) * kPi / h);
    weight_sum += wj;
    const double* px = x.data() + static_cast<std::size_t>(j) * w * kChannels;
    const double* py = y.data() + static_cast<std::size_t>(j) * w * kChannels;
    double row_sq = 0.0;
    for (int i = 0; i < w * kChannels; ++i) {
      const double d = px[i] - py[i];
      row_sq += d * d;
    }
    acc += wj * row_sq;
  }
  const double ws_mse = acc / (static_cast<double>(kChannels) * w * weight_sum);
  if (ws_mse <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / ws_mse);
}

inline double ws_psnr(const ErpImage& x, const ErpImage& y) {
  if (x.width != y.width || x.height != y.height)
    throw ConfigError("ws-psnr: image size mismatch");
  std::vector<double> px(x.data.begin(), x.data.end());
  std::vector<double> py(y.data.begin(), y.data.end());
  return ws_psnr_planes(px, py, x.width, x.height);
}

/// Catalog of shipped scorers. `composite` is the trainable linear scorer;
/// the rest are fixed references. FR entries need a reference image.
struct ScorerInfo {
  const char* name;
  bool trainable;
  bool needs_reference;
};

inline const std::vector<ScorerInfo>& scorer_catalog() {
  static const std::vector<ScorerInfo> catalog = {
      {"composite", true, false},
      {"sharpness", false, false},
      {"noise-mad", false, false},
      {"vp-psnr", false, true},
      {"ws-psnr", false, true},
  };
  return catalog;
}

inline const ScorerInfo* find_scorer(const std::string& name) {
  for (const ScorerInfo& s : scorer_catalog())
    if (name == s.name) return &s;
  return nullptr;
}

}  // namespace panobench
