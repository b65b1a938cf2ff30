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

#include "panobench/errors.hpp"
#include "panobench/geometry.hpp"
#include "panobench/image.hpp"
#include "panobench/rng.hpp"

namespace panobench {

enum class DistortionKind { GaussianBlur, GaussianNoise, BrightnessShift, StitchSeam };
enum class DistortionScope { Homogeneous, Heterogeneous };

inline const char* kind_code(DistortionKind k) {
  switch (k) {
    case DistortionKind::GaussianBlur: return "GB";
    case DistortionKind::GaussianNoise: return "GN";
    case DistortionKind::BrightnessShift: return "BD";
    case DistortionKind::StitchSeam: return "ST";
  }
  return "??";
}

inline DistortionKind kind_from_code(const std::string& code) {
  if (code == "GB") return DistortionKind::GaussianBlur;
  if (code == "GN") return DistortionKind::GaussianNoise;
  if (code == "BD") return DistortionKind::BrightnessShift;
  if (code == "ST") return DistortionKind::StitchSeam;
  throw ConfigError("unknown distortion code '" + code + "' (expected GB, GN, BD or ST)");
}

inline constexpr int kMaxLevel = 5;
inline constexpr double kCapRampWidth = 5.0 * kPi / 180.0;
inline constexpr int kLensCount = 6;

/// Severity ladders, level 1..5, spanning imperceptible to severe.
inline double ladder_value(DistortionKind kind, int level) {
  static constexpr double kBlur[kMaxLevel] = {1, 2, 4, 8, 16};        // sigma, px
  static constexpr double kNoise[kMaxLevel] = {5, 10, 20, 35, 50};    // sigma, intensity
  static constexpr double kBright[kMaxLevel] = {10, 20, 40, 60, 80};  // delta, intensity
  static constexpr double kStitch[kMaxLevel] = {2, 4, 8, 16, 32};     // shift, px
  if (level < 1 || level > kMaxLevel)
    throw ConfigError("distortion level must be 1..5, got " + std::to_string(level));
  switch (kind) {
    case DistortionKind::GaussianBlur: return kBlur[level - 1];
    case DistortionKind::GaussianNoise: return kNoise[level - 1];
    case DistortionKind::BrightnessShift: return kBright[level - 1];
    case DistortionKind::StitchSeam: return kStitch[level - 1];
  }
  throw ConfigError("unknown distortion kind");
}

/// Lens directions for heterogeneous scope: the six axis-aligned caps.
inline Vec3 lens_axis(int lens_index) {
  static constexpr double kAxes[kLensCount][3] = {
      {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  if (lens_index < 0 || lens_index >= kLensCount)
    throw ConfigError("lens index must be 0..5, got " + std::to_string(lens_index));
  return {kAxes[lens_index][0], kAxes[lens_index][1], kAxes[lens_index][2]};
}

struct DistortionSpec {
  DistortionKind kind = DistortionKind::GaussianBlur;
  int level = 1;
  /// Parameter magnitude: blur/noise sigma, brightness delta, stitch shift px.
  double amount = 1.0;
  DistortionScope scope = DistortionScope::Homogeneous;
  int lens_index = 0;                          // heterogeneous only
  double cap_radius = deg_to_rad(50.0);        // heterogeneous only
  double seam_lon = 0.0;                       // stitch only
};

inline void validate_spec(const DistortionSpec& spec) {
  if (spec.level < 1 || spec.level > kMaxLevel)
    throw ConfigError("distortion level must be 1..5");
  if (spec.amount < 0.0) throw ConfigError("distortion amount must be >= 0");
  if (spec.kind == DistortionKind::BrightnessShift && std::abs(spec.amount) > 128.0)
    throw ConfigError("brightness shift must satisfy |delta| <= 128");
  if (spec.scope == DistortionScope::Heterogeneous) {
    lens_axis(spec.lens_index);
    if (!(spec.cap_radius > 0.0 && spec.cap_radius < kPi))
      throw ConfigError("cap radius must lie in (0, pi)");
  }
}

inline DistortionSpec make_spec(DistortionKind kind, int level,
                                DistortionScope scope = DistortionScope::Homogeneous,
                                int lens_index = 0,
                                double cap_radius = deg_to_rad(50.0)) {
  DistortionSpec spec;
  spec.kind = kind;
  spec.level = level;
  spec.amount = ladder_value(kind, level);
  spec.scope = scope;
  spec.lens_index = lens_index;
  spec.cap_radius = cap_radius;
  validate_spec(spec);
  return spec;
}

namespace detail {

using Plane = std::vector<double>;  // interleaved RGB doubles

inline Plane to_plane(const ErpImage& img) {
  Plane p(img.data.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<double>(img.data[i]);
  return p;
}

/// Separable Gaussian, kernel truncated at 3 sigma; columns wrap, rows
/// reflect (edge-inclusive).
inline Plane gaussian_blur(const Plane& src, int w, int h, double sigma) {
  if (sigma <= 0.0) return src;
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    kernel[k + radius] = std::exp(-0.5 * (k / sigma) * (k / sigma));
    sum += kernel[k + radius];
  }
  for (double& v : kernel) v /= sum;

  Plane tmp(src.size()), out(src.size());
  // horizontal pass with wraparound
  for (int j = 0; j < h; ++j) {
    const double* row = src.data() + static_cast<std::size_t>(j) * w * kChannels;
    double* trow = tmp.data() + static_cast<std::size_t>(j) * w * kChannels;
    for (int i = 0; i < w; ++i) {
      double acc[kChannels] = {0, 0, 0};
      for (int k = -radius; k <= radius; ++k) {
        int c = (i + k) % w;
        if (c < 0) c += w;
        const double kv = kernel[k + radius];
        for (int ch = 0; ch < kChannels; ++ch) acc[ch] += kv * row[c * kChannels + ch];
      }
      for (int ch = 0; ch < kChannels; ++ch) trow[i * kChannels + ch] = acc[ch];
    }
  }
  // vertical pass with reflect padding
  auto reflect = [h](int r) {
    while (r < 0 || r >= h) {
      if (r < 0) r = -r - 1;
      if (r >= h) r = 2 * h - r - 1;
    }
    return r;
  };
  for (int j = 0; j < h; ++j) {
    double* orow = out.data() + static_cast<std::size_t>(j) * w * kChannels;
    for (int k = -radius; k <= radius; ++k) {
      const int r = reflect(j + k);
      const double kv = kernel[k + radius];
      const double* trow = tmp.data() + static_cast<std::size_t>(r) * w * kChannels;
      for (int i = 0; i < w * kChannels; ++i) orow[i] += kv * trow[i];
    }
  }
  return out;
}

inline Plane add_noise(const Plane& src, double sigma, Rng& rng) {
  Plane out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) out[i] = src[i] + sigma * rng.next_normal();
  return out;
}

inline Plane shift_brightness(const Plane& src, double delta) {
  Plane out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) out[i] = src[i] + delta;
  return out;
}

/// Horizontal shift of the half-panorama starting at the seam longitude,
/// with a 2 pixel linear blend on both boundary columns.
inline Plane stitch_shear(const Plane& src, int w, int h, double shift_px, double seam_lon) {
  const double seam_u = (wrap_longitude(seam_lon) / kTwoPi + 0.5) * w;
  const int seam_col = static_cast<int>(std::floor(seam_u)) % w;
  const int half = w / 2;
  const int shift = static_cast<int>(std::lround(shift_px));
  Plane out = src;
  auto col_of = [w](int c) {
    int m = c % w;
    return m < 0 ? m + w : m;
  };
  for (int j = 0; j < h; ++j) {
    const double* row = src.data() + static_cast<std::size_t>(j) * w * kChannels;
    double* orow = out.data() + static_cast<std::size_t>(j) * w * kChannels;
    for (int d = 0; d < half; ++d) {
      const int c = col_of(seam_col + d);
      const int cs = col_of(c + shift);
      // blend weight ramps over the two columns at each end of the band
      double wgt = 1.0;
      if (d < 2) wgt = (d + 1) / 3.0;
      if (d >= half - 2) wgt = (half - d) / 3.0;
      for (int ch = 0; ch < kChannels; ++ch) {
        const double shifted = row[cs * kChannels + ch];
        const double orig = row[c * kChannels + ch];
        orow[c * kChannels + ch] = orig + wgt * (shifted - orig);
      }
    }
  }
  return out;
}

/// Heterogeneous blend mask: 1 inside the spherical cap, smoothstep ramp
/// down to 0 over kCapRampWidth, 0 elsewhere.
inline std::vector<double> cap_mask(int w, int h, const Vec3& axis, double radius) {
  std::vector<double> mask(static_cast<std::size_t>(w) * h);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      const SphericalPoint p = erp_to_sphere(i + 0.5, j + 0.5, w, h);
      const double theta = angle_between(to_unit_vector(p), axis);
      double m;
      if (theta <= radius) {
        m = 1.0;
      } else if (theta >= radius + kCapRampWidth) {
        m = 0.0;
      } else {
        const double t = (theta - radius) / kCapRampWidth;
        m = 1.0 - (3.0 * t * t - 2.0 * t * t * t);
      }
      mask[static_cast<std::size_t>(j) * w + i] = m;
    }
  }
  return mask;
}

}  // namespace detail

/// Applies one degradation. Deterministic under (inputs, seed). Heterogeneous
/// scope confines the effect to the lens cap; pixels with zero mask weight
/// are copied from the source byte-for-byte.
inline ErpImage apply_distortion(const ErpImage& img, const DistortionSpec& spec,
                                 std::uint64_t seed) {
  validate_spec(spec);
  validate_erp(img, /*allow_any_aspect=*/true);

  detail::Plane src = detail::to_plane(img);
  detail::Plane dist;
  switch (spec.kind) {
    case DistortionKind::GaussianBlur:
      dist = detail::gaussian_blur(src, img.width, img.height, spec.amount);
      break;
    case DistortionKind::GaussianNoise: {
      Rng rng(mix_seed(seed, 0x6e6f697365ULL));
      dist = spec.amount > 0.0 ? detail::add_noise(src, spec.amount, rng) : src;
      break;
    }
    case DistortionKind::BrightnessShift:
      dist = detail::shift_brightness(src, spec.amount);
      break;
    case DistortionKind::StitchSeam:
      dist = detail::stitch_shear(src, img.width, img.height, spec.amount, spec.seam_lon);
      break;
  }

  std::vector<double> mask;
  if (spec.scope == DistortionScope::Heterogeneous)
    mask = detail::cap_mask(img.width, img.height, lens_axis(spec.lens_index),
                            spec.cap_radius);

  ErpImage out = img;
  for (std::size_t p = 0; p < img.pixel_count(); ++p) {
    const double m = mask.empty() ? 1.0 : mask[p];
    if (m <= 0.0) continue;  // untouched pixels stay bit-identical
    for (int ch = 0; ch < kChannels; ++ch) {
      const std::size_t k = p * kChannels + ch;
      const double v = src[k] + m * (dist[k] - src[k]);
      out.data[k] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// Database synthesis plan.

struct DatabasePlan {
  std::vector<DistortionKind> types = {DistortionKind::GaussianBlur,
                                       DistortionKind::GaussianNoise};
  int levels = kMaxLevel;
  std::vector<DistortionScope> scopes = {DistortionScope::Homogeneous};
  double cap_radius = deg_to_rad(50.0);
};

struct DatabaseRecord {
  std::string id;
  std::string relative_path;
  std::string source_id;
  bool pristine = false;
  DistortionSpec spec;          // meaningful when !pristine
  double mos = 5.0;
  std::uint64_t record_seed = 0;
};

struct SyntheticDatabase {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<DatabaseRecord> records;
};

/// Synthetic MOS: 5 - 4 q(level / levels_max), clamped to [1, 5], with
/// q(r) = r for homogeneous scope and q(r) = 0.6 r for heterogeneous scope
/// (local damage hurts less on average). Known ground truth for pipeline
/// tests, not a perceptual model.
inline double synthetic_mos(DistortionScope scope, int level, int levels_max) {
  const double r = static_cast<double>(level) / static_cast<double>(levels_max);
  const double q = scope == DistortionScope::Homogeneous ? r : 0.6 * r;
  return std::clamp(5.0 - 4.0 * q, 1.0, 5.0);
}

inline const char* scope_code(DistortionScope s) {
  return s == DistortionScope::Homogeneous ? "hom" : "het";
}

/// Lays out the record set for sources x types x levels x scopes plus one
/// pristine record per source. Pixel data is synthesized separately per
/// record (see synthesize_record) so parallel and serial runs agree.
inline SyntheticDatabase build_database(const std::vector<std::string>& source_ids,
                                        const DatabasePlan& plan, std::uint64_t seed,
                                        const std::string& name) {
  if (source_ids.size() < 3)
    throw ConfigError("build_database: needs at least 3 source images, got " +
                      std::to_string(source_ids.size()));
  if (plan.levels < 1 || plan.levels > kMaxLevel)
    throw ConfigError("build_database: levels must be 1..5");
  if (plan.types.empty() || plan.scopes.empty())
    throw ConfigError("build_database: plan needs at least one type and scope");

  SyntheticDatabase db;
  db.name = name;
  db.seed = seed;

  for (const std::string& src : source_ids) {
    DatabaseRecord rec;
    rec.id = src;
    rec.source_id = src;
    rec.pristine = true;
    rec.relative_path = "pristine/" + src + ".png";
    rec.mos = 5.0;
    db.records.push_back(std::move(rec));
  }

  std::uint64_t ordinal = 0;
  for (const std::string& src : source_ids) {
    for (DistortionKind kind : plan.types) {
      for (int level = 1; level <= plan.levels; ++level) {
        for (DistortionScope scope : plan.scopes) {
          DatabaseRecord rec;
          rec.source_id = src;
          rec.pristine = false;
          rec.record_seed = mix_seed(seed, ++ordinal);
          Rng layout(rec.record_seed);
          const int lens = static_cast<int>(layout.next_below(kLensCount));
          const double seam = wrap_longitude(layout.next_double() * kTwoPi);
          rec.spec = make_spec(kind, level, scope, lens, plan.cap_radius);
          rec.spec.seam_lon = seam;
          rec.mos = synthetic_mos(scope, level, plan.levels);
          rec.id = src + "_" + kind_code(kind) + "_" + scope_code(scope) + "_L" +
                   std::to_string(level);
          rec.relative_path = std::string(kind_code(kind)) + "/" + scope_code(scope) + "/" +
                              rec.id + ".png";
          db.records.push_back(std::move(rec));
        }
      }
    }
  }
  return db;
}

inline ErpImage synthesize_record(const ErpImage& source, const DatabaseRecord& rec) {
  if (rec.pristine) {
    ErpImage out = source;
    out.id = rec.id;
    return out;
  }
  ErpImage out = apply_distortion(source, rec.spec, rec.record_seed);
  out.id = rec.id;
  return out;
}

/// Human-readable degradation tag stored in manifests.
inline std::string distortion_tag(const DatabaseRecord& rec) {
  if (rec.pristine) return "pristine";
  std::string tag = std::string(kind_code(rec.spec.kind)) + "_" + scope_code(rec.spec.scope) +
                    "_L" + std::to_string(rec.spec.level);
  if (rec.spec.scope == DistortionScope::Heterogeneous)
    tag += "_lens" + std::to_string(rec.spec.lens_index);
  return tag;
}

}  // namespace panobench
