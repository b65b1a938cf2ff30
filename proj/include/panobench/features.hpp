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

#include <array>
#include <cmath>
#include <vector>

#include "panobench/errors.hpp"
#include "panobench/image.hpp"

namespace panobench {

inline constexpr int kFeatureDim = 5;

/// Quality-aware viewport descriptor:
///   [0] mean luminance
///   [1] luminance standard deviation (population)
///   [2] Laplacian variance (4-neighbor kernel, interior pixels)
///   [3] mean gradient magnitude (central differences, interior pixels)
///   [4] high-frequency energy ratio in [0, 1]
using FeatureVector = std::array<double, kFeatureDim>;

inline const std::array<const char*, kFeatureDim>& feature_names() {
  static const std::array<const char*, kFeatureDim> names = {
      "mean_luminance", "luminance_std", "laplacian_variance", "mean_gradient",
      "high_freq_ratio"};
  return names;
}

inline std::vector<double> luminance_plane(const Viewport& vp) {
  std::vector<double> lum(static_cast<std::size_t>(vp.width) * vp.height);
  const float* p = vp.data.data();
  for (std::size_t i = 0; i < lum.size(); ++i, p += kChannels)
    lum[i] = luminance(p[0], p[1], p[2]);
  return lum;
}

/// Response of the kernel [0 1 0; 1 -4 1; 0 1 0] on the interior
/// (w-2) x (h-2) region; empty when the plane is thinner than 3 pixels.
inline std::vector<double> laplacian_response(const std::vector<double>& lum, int w, int h) {
  if (w < 3 || h < 3) return {};
  std::vector<double> resp;
  resp.reserve(static_cast<std::size_t>(w - 2) * (h - 2));
  for (int j = 1; j < h - 1; ++j) {
    const double* row = lum.data() + static_cast<std::size_t>(j) * w;
    for (int i = 1; i < w - 1; ++i)
      resp.push_back(row[i - w] + row[i + w] + row[i - 1] + row[i + 1] - 4.0 * row[i]);
  }
  return resp;
}

namespace detail {

inline double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double variance_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

}  // namespace detail

/// Handcrafted per-viewport features. The high-frequency ratio divides the
/// energy of the gain-normalized Laplacian response (kernel scaled by its
/// absolute coefficient sum, 8) by the total AC energy of the luminance
/// plane, which bounds it to [0, 1]; it is 0 for constant viewports.
inline FeatureVector extract_features(const Viewport& vp) {
  if (vp.width < 1 || vp.height < 1 ||
      vp.data.size() != static_cast<std::size_t>(vp.width) * vp.height * kChannels)
    throw DataError("extract_features: malformed viewport");

  const std::vector<double> lum = luminance_plane(vp);
  const double mean_lum = detail::mean_of(lum);

  double ac_energy = 0.0;
  for (double x : lum) ac_energy += (x - mean_lum) * (x - mean_lum);
  const double lum_std = std::sqrt(ac_energy / static_cast<double>(lum.size()));

  const std::vector<double> lap = laplacian_response(lum, vp.width, vp.height);
  const double lap_var = detail::variance_of(lap);

  double grad_sum = 0.0;
  std::size_t grad_count = 0;
  for (int j = 1; j < vp.height - 1; ++j) {
    const double* row = lum.data() + static_cast<std::size_t>(j) * vp.width;
    for (int i = 1; i < vp.width - 1; ++i) {
      const double gx = (row[i + 1] - row[i - 1]) * 0.5;
      const double gy = (row[i + vp.width] - row[i - vp.width]) * 0.5;
      grad_sum += std::sqrt(gx * gx + gy * gy);
      ++grad_count;
    }
  }
  const double mean_grad = grad_count ? grad_sum / static_cast<double>(grad_count) : 0.0;

  double lap_energy = 0.0;
  for (double r : lap) {
    const double n = r / 8.0;
    lap_energy += n * n;
  }
  const double hf_ratio = ac_energy > 1e-12 ? lap_energy / ac_energy : 0.0;

  FeatureVector f{mean_lum, lum_std, lap_var, mean_grad, hf_ratio};
  for (double x : f)
    if (!std::isfinite(x)) throw NumericError("extract_features: non-finite feature");
  return f;
}

}  // namespace panobench
