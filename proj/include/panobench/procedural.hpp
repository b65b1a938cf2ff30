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
#include <string>
#include <vector>

#include "panobench/image.hpp"
#include "panobench/rng.hpp"

namespace panobench {

namespace detail {

/// Lattice value noise, periodic in x so the panorama wraps seamlessly.
inline double lattice_value(std::uint64_t seed, int octave, int cx, int cy, int period_x) {
  int m = cx % period_x;
  if (m < 0) m += period_x;
  std::uint64_t s = seed;
  s = mix_seed(s, static_cast<std::uint64_t>(octave) * 0x10001ULL + 17);
  s = mix_seed(s, static_cast<std::uint64_t>(m) * 0x7fffULL + 23);
  s = mix_seed(s, static_cast<std::uint64_t>(cy) * 0x1fffULL + 41);
  return static_cast<double>(s >> 11) * 0x1.0p-53;
}

inline double smooth(double t) { return t * t * (3.0 - 2.0 * t); }

inline double value_noise(std::uint64_t seed, int octave, double x, double y, int period_x) {
  const double fx = std::floor(x), fy = std::floor(y);
  const int cx = static_cast<int>(fx), cy = static_cast<int>(fy);
  const double tx = smooth(x - fx), ty = smooth(y - fy);
  const double v00 = lattice_value(seed, octave, cx, cy, period_x);
  const double v10 = lattice_value(seed, octave, cx + 1, cy, period_x);
  const double v01 = lattice_value(seed, octave, cx, cy + 1, period_x);
  const double v11 = lattice_value(seed, octave, cx + 1, cy + 1, period_x);
  const double top = v00 + (v10 - v00) * tx;
  const double bot = v01 + (v11 - v01) * tx;
  return top + (bot - top) * ty;
}

}  // namespace detail

/// Procedural test panorama: multi-octave value noise, wrap-continuous in
/// longitude, with octaves down to two-pixel cells so there is real detail
/// for blur and noise to destroy. The luminance field is standardized to
/// mean 128 / std 42 per image and the chroma axis is luminance-orthogonal,
/// so sources differ in layout but share global statistics.
inline ErpImage generate_panorama(std::uint64_t seed, int width, int height,
                                  const std::string& id) {
  struct Octave {
    int cells_x;
    double amplitude;
  };
  const Octave octaves[] = {
      {8, 0.50},
      {16, 0.30},
      {32, 0.22},
      {64, 0.16},
      {std::max(96, width / 8), 0.13},
      {std::max(128, width / 4), 0.11},
      {std::max(192, width / 2), 0.09},
  };

  const std::size_t pixels = static_cast<std::size_t>(width) * height;
  std::vector<double> field(pixels);
  double sum = 0.0, sum2 = 0.0;
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      double v = 0.0;
      for (std::size_t o = 0; o < std::size(octaves); ++o) {
        const double cells = octaves[o].cells_x;
        const double x = (i + 0.5) / width * cells;
        const double y = (j + 0.5) / height * (cells / 2.0);
        v += octaves[o].amplitude *
             detail::value_noise(seed, static_cast<int>(o), x, y, octaves[o].cells_x);
      }
      field[static_cast<std::size_t>(j) * width + i] = v;
      sum += v;
      sum2 += v * v;
    }
  }
  const double mean = sum / static_cast<double>(pixels);
  const double stddev =
      std::sqrt(std::max(1e-12, sum2 / static_cast<double>(pixels) - mean * mean));

  std::vector<std::uint8_t> data(pixels * kChannels);
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      const std::size_t p = static_cast<std::size_t>(j) * width + i;
      const double lum = 128.0 + 42.0 * (field[p] - mean) / stddev;

      // coarse chroma along a direction with (near) zero luminance so the
      // palette varies without disturbing the luminance statistics
      const double chroma = detail::value_noise(seed ^ 0x63726f6dULL, 99,
                                                (i + 0.5) / width * 24.0,
                                                (j + 0.5) / height * 12.0, 24);
      const double k = 55.0 * (chroma - 0.5);
      const double rgb[3] = {lum + k, lum - 0.4 * k, lum - 0.56 * k};
      for (int c = 0; c < 3; ++c)
        data[p * kChannels + c] =
            static_cast<std::uint8_t>(std::clamp(std::lround(rgb[c]), 0L, 255L));
    }
  }
  return make_erp(width, height, id, std::move(data));
}

}  // namespace panobench
