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
#include <cstdint>
#include <string>
#include <vector>

#include "panobench/errors.hpp"
#include "panobench/geometry.hpp"

namespace panobench {

inline constexpr int kChannels = 3;

/// Equirectangular RGB raster, row-major 8-bit samples.
struct ErpImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;
  std::string id;

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  const std::uint8_t* pixel(int col, int row) const {
    return data.data() + (static_cast<std::size_t>(row) * width + col) * kChannels;
  }
  std::uint8_t* pixel(int col, int row) {
    return data.data() + (static_cast<std::size_t>(row) * width + col) * kChannels;
  }
};

/// Checks the raster invariants. The 2:1 aspect requirement can be waived for
/// callers that knowingly feed partial panoramas.
inline void validate_erp(const ErpImage& img, bool allow_any_aspect = false) {
  if (img.width < 16 || img.height < 8)
    throw DataError("erp '" + img.id + "': minimum size is 16x8, got " +
                    std::to_string(img.width) + "x" + std::to_string(img.height));
  if (!allow_any_aspect && img.width != 2 * img.height)
    throw DataError("erp '" + img.id + "': expected 2:1 equirectangular aspect, got " +
                    std::to_string(img.width) + "x" + std::to_string(img.height) +
                    " (pass the aspect override to accept)");
  if (img.data.size() != img.pixel_count() * kChannels)
    throw DataError("erp '" + img.id + "': sample buffer size does not match dimensions");
}

inline ErpImage make_erp(int width, int height, std::string id,
                         std::vector<std::uint8_t> data, bool allow_any_aspect = false) {
  ErpImage img{width, height, std::move(data), std::move(id)};
  validate_erp(img, allow_any_aspect);
  return img;
}

inline ErpImage make_constant_erp(int width, int height, std::string id,
                                  std::array<std::uint8_t, 3> rgb) {
  std::vector<std::uint8_t> data(static_cast<std::size_t>(width) * height * kChannels);
  for (std::size_t p = 0; p < data.size(); p += kChannels) {
    data[p] = rgb[0];
    data[p + 1] = rgb[1];
    data[p + 2] = rgb[2];
  }
  return make_erp(width, height, std::move(id), std::move(data));
}

/// Rectilinear crop of a panorama. Samples are floating point in [0, 255] so
/// downstream feature math does not requantize.
struct Viewport {
  int width = 0;
  int height = 0;
  std::vector<float> data;
  SphericalPoint center;
  double fov = 0.0;

  const float* pixel(int col, int row) const {
    return data.data() + (static_cast<std::size_t>(row) * width + col) * kChannels;
  }
};

/// Bilinear interpolation with texel centers at (k + 0.5). Longitude wraps
/// horizontally; latitude clamps at the poles. Total on all finite inputs.
/// The wrap happens before interpolation (fmod is exact), so sampling at
/// u + k*w reproduces sampling at u bit for bit.
inline std::array<double, 3> sample_bilinear(const ErpImage& img, double u, double v) {
  const int w = img.width, h = img.height;
  u = std::fmod(u, static_cast<double>(w));
  if (u < 0.0) u += w;
  const double x = u - 0.5;
  const double y = std::clamp(v - 0.5, 0.0, static_cast<double>(h - 1));
  const double xf = std::floor(x), yf = std::floor(y);
  const double fx = x - xf, fy = y - yf;

  auto wrap_col = [w](long c) {
    long m = c % w;
    return static_cast<int>(m < 0 ? m + w : m);
  };
  const int c0 = wrap_col(static_cast<long>(xf));
  const int c1 = wrap_col(static_cast<long>(xf) + 1);
  const int r0 = static_cast<int>(yf);
  const int r1 = std::min(r0 + 1, h - 1);

  const std::uint8_t* p00 = img.pixel(c0, r0);
  const std::uint8_t* p10 = img.pixel(c1, r0);
  const std::uint8_t* p01 = img.pixel(c0, r1);
  const std::uint8_t* p11 = img.pixel(c1, r1);

  std::array<double, 3> out{};
  for (int c = 0; c < kChannels; ++c) {
    const double top = p00[c] + (p10[c] - p00[c]) * fx;
    const double bot = p01[c] + (p11[c] - p01[c]) * fx;
    out[c] = top + (bot - top) * fy;
  }
  return out;
}

inline double luminance(double r, double g, double b) {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

}  // namespace panobench
