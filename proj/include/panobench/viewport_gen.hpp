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

#include <string>
#include <vector>

#include "panobench/errors.hpp"
#include "panobench/geometry.hpp"
#include "panobench/image.hpp"

namespace panobench {

/// Equator-anchored viewport trajectory: `count` viewports whose centers sit
/// at longitude start_lon + m * offset_step, latitude 0, extracted with the
/// given field of view into square rasters of viewport_size pixels.
struct Trajectory {
  double start_lon = 0.0;
  double offset_step = kPi / 4.0;
  int count = 8;
  double fov = kPi / 3.0;
  int viewport_size = 224;
};

enum class TrajectoryMode { Image8, Video30 };

inline void validate_trajectory(const Trajectory& t) {
  if (t.count < 1) throw ConfigError("trajectory: count must be >= 1");
  if (t.offset_step * t.count > kTwoPi + 1e-9)
    throw ConfigError("trajectory: step * count exceeds one revolution");
  if (!(t.fov > 0.0 && t.fov < kPi)) throw ConfigError("trajectory: fov must lie in (0, pi)");
  if (t.viewport_size < 2) throw ConfigError("trajectory: viewport size must be >= 2");
}

/// Image8: eight 224x224 viewports every 45 degrees.
/// Video30: thirty 224x224 viewports every 12 degrees (video-style input).
inline Trajectory make_trajectory(TrajectoryMode mode) {
  Trajectory t;
  switch (mode) {
    case TrajectoryMode::Image8:
      t = {0.0, kPi / 4.0, 8, kPi / 3.0, 224};
      break;
    case TrajectoryMode::Video30:
      t = {0.0, kPi / 15.0, 30, kPi / 3.0, 224};
      break;
  }
  validate_trajectory(t);
  return t;
}

inline Trajectory make_trajectory(double start_lon, double step, int count, double fov,
                                  int size) {
  Trajectory t{start_lon, step, count, fov, size};
  validate_trajectory(t);
  return t;
}

inline std::vector<SphericalPoint> trajectory_centers(const Trajectory& t) {
  std::vector<SphericalPoint> centers;
  centers.reserve(t.count);
  for (int m = 0; m < t.count; ++m)
    centers.push_back({wrap_longitude(t.start_lon + m * t.offset_step), 0.0});
  return centers;
}

/// Renders one viewport by casting a ray per output pixel and bilinearly
/// resampling the panorama.
inline Viewport extract_viewport(const ErpImage& img, const SphericalPoint& center,
                                 double fov, int size) {
  Viewport vp;
  vp.width = size;
  vp.height = size;
  vp.center = center;
  vp.fov = fov;
  vp.data.resize(static_cast<std::size_t>(size) * size * kChannels);
  float* out = vp.data.data();
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      const SphericalPoint dir = viewport_ray(i, j, size, size, fov, center);
      const ErpCoord c = sphere_to_erp(dir, img.width, img.height);
      const std::array<double, 3> rgb = sample_bilinear(img, c.u, c.v);
      out[0] = static_cast<float>(rgb[0]);
      out[1] = static_cast<float>(rgb[1]);
      out[2] = static_cast<float>(rgb[2]);
      out += kChannels;
    }
  }
  return vp;
}

/// Extracts the full trajectory in order m = 0..count-1. Deterministic:
/// identical inputs give bit-identical rasters.
inline std::vector<Viewport> extract_viewports(const ErpImage& img, const Trajectory& t) {
  validate_erp(img, /*allow_any_aspect=*/true);
  validate_trajectory(t);
  if (t.viewport_size >= img.width || t.viewport_size >= img.height)
    throw ConfigError("viewport size " + std::to_string(t.viewport_size) +
                      " must be smaller than the panorama (" + std::to_string(img.width) +
                      "x" + std::to_string(img.height) + ")");
  std::vector<Viewport> vps;
  vps.reserve(t.count);
  for (const SphericalPoint& c : trajectory_centers(t))
    vps.push_back(extract_viewport(img, c, t.fov, t.viewport_size));
  return vps;
}

}  // namespace panobench
