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
#include <stdexcept>

namespace panobench {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Direction on the unit sphere. Longitude increases eastward and lives in
/// [-pi, pi); latitude is 0 at the equator, +pi/2 at the north pole.
struct SphericalPoint {
  double lon = 0.0;
  double lat = 0.0;
};

/// Wraps a longitude into [-pi, pi).
inline double wrap_longitude(double lon) {
  double r = std::fmod(lon + kPi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r - kPi;
}

/// Wraps longitude and clamps latitude into range.
inline SphericalPoint normalized(SphericalPoint p) {
  p.lon = wrap_longitude(p.lon);
  p.lat = std::clamp(p.lat, -kPi / 2.0, kPi / 2.0);
  return p;
}

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 normalized(const Vec3& v) {
  const double n = std::sqrt(dot(v, v));
  return {v.x / n, v.y / n, v.z / n};
}

/// World frame: +y is the vertical, (lon=0, lat=0) looks down +z,
/// (lon=+pi/2, lat=0) looks down +x.
inline Vec3 to_unit_vector(const SphericalPoint& p) {
  const double cl = std::cos(p.lat);
  return {cl * std::sin(p.lon), std::sin(p.lat), cl * std::cos(p.lon)};
}

inline SphericalPoint to_spherical(const Vec3& d) {
  const double y = std::clamp(d.y, -1.0, 1.0);
  return {std::atan2(d.x, d.z), std::asin(y)};
}

/// Angle between two unit directions, in radians.
inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

/// Fractional pixel position in an equirectangular raster.
struct ErpCoord {
  double u = 0.0;
  double v = 0.0;
};

/// Maps a fractional equirectangular pixel position to the sphere.
/// u runs 0..w left to right, v runs 0..h top to bottom; the raster center
/// (w/2, h/2) is the forward direction (lon 0, lat 0).
inline SphericalPoint erp_to_sphere(double u, double v, int w, int h) {
  if (!(u >= 0.0 && u <= static_cast<double>(w)) ||
      !(v >= 0.0 && v <= static_cast<double>(h)))
    throw std::domain_error("erp_to_sphere: pixel coordinate outside the raster");
  return {(u / w - 0.5) * kTwoPi, (0.5 - v / h) * kPi};
}

/// Exact inverse of erp_to_sphere for normalized points.
inline ErpCoord sphere_to_erp(const SphericalPoint& p, int w, int h) {
  return {(p.lon / kTwoPi + 0.5) * w, (0.5 - p.lat / kPi) * h};
}

/// Direction seen through pixel (i, j) of a rectilinear viewport of size
/// vp_w x vp_h looking at `center` with zero roll. Pixel centers sit at
/// (i + 0.5, j + 0.5); fractional i, j address points between centers, so
/// i = -0.5 and i = vp_w - 0.5 are the exact horizontal edges of the frame.
inline SphericalPoint viewport_ray(double i, double j, int vp_w, int vp_h, double fov,
                                   const SphericalPoint& center) {
  if (!(fov > 0.0 && fov < kPi))
    throw std::domain_error("viewport_ray: fov must lie in (0, pi)");
  const double half_extent = std::tan(fov / 2.0);
  const double x = (2.0 * (i + 0.5) / vp_w - 1.0) * half_extent;
  const double y = (1.0 - 2.0 * (j + 0.5) / vp_h) * half_extent;

  // Camera frame: +x right, +y up, +z toward the viewport center.
  const double n = std::sqrt(x * x + y * y + 1.0);
  const double cx = x / n, cy = y / n, cz = 1.0 / n;

  // Pitch about the camera x-axis, then yaw about the world vertical.
  const double cl = std::cos(center.lat), sl = std::sin(center.lat);
  const double py = cy * cl + cz * sl;
  const double pz = -cy * sl + cz * cl;
  const double co = std::cos(center.lon), so = std::sin(center.lon);
  const double wx = cx * co + pz * so;
  const double wz = -cx * so + pz * co;
  return to_spherical({wx, py, wz});
}

}  // namespace panobench
