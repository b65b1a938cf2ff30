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

#include <catch2/catch_amalgamated.hpp>

#include "panobench/features.hpp"
#include "panobench/rng.hpp"

using namespace panobench;

namespace {

Viewport make_viewport(int w, int h, const std::vector<double>& lum) {
  Viewport vp;
  vp.width = w;
  vp.height = h;
  vp.data.resize(static_cast<std::size_t>(w) * h * 3);
  for (std::size_t i = 0; i < lum.size(); ++i)
    for (int c = 0; c < 3; ++c) vp.data[i * 3 + c] = static_cast<float>(lum[i]);
  return vp;
}

Viewport random_viewport(Rng& rng, int w, int h) {
  std::vector<double> lum(static_cast<std::size_t>(w) * h);
  for (double& v : lum) v = rng.next_double() * 255.0;
  return make_viewport(w, h, lum);
}

// test-local separable gaussian blur on the luminance, reflect padding
Viewport blur_viewport(const Viewport& vp, double sigma) {
  const int w = vp.width, h = vp.height;
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int k = -radius; k <= radius; ++k)
    sum += kernel[k + radius] = std::exp(-0.5 * k * k / (sigma * sigma));
  for (double& v : kernel) v /= sum;
  auto reflect = [](int i, int n) {
    while (i < 0 || i >= n) i = i < 0 ? -i - 1 : 2 * n - i - 1;
    return i;
  };
  std::vector<double> a(static_cast<std::size_t>(w) * h), b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = vp.data[i * 3];
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k)
        acc += kernel[k + radius] * a[j * w + reflect(i + k, w)];
      b[j * w + i] = acc;
    }
  std::vector<double> c(a.size());
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k)
        acc += kernel[k + radius] * b[reflect(j + k, h) * w + i];
      c[j * w + i] = acc;
    }
  return make_viewport(w, h, c);
}

}  // namespace

TEST_CASE("constant viewport has zero variation features", "[features]") {
  const Viewport vp = make_viewport(16, 16, std::vector<double>(256, 128.0));
  const FeatureVector f = extract_features(vp);
  CHECK(f[0] == Catch::Approx(128.0).margin(1e-9));
  CHECK(f[1] == 0.0);
  CHECK(f[2] == 0.0);
  CHECK(f[3] == 0.0);
  CHECK(f[4] == 0.0);
}

TEST_CASE("checkerboard laplacian variance matches direct convolution", "[features]") {
  std::vector<double> lum(16);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) lum[j * 4 + i] = ((i + j) % 2) ? 255.0 : 0.0;
  const Viewport vp = make_viewport(4, 4, lum);

  // oracle: direct kernel application over the 2x2 interior
  std::vector<double> resp;
  for (int j = 1; j < 3; ++j)
    for (int i = 1; i < 3; ++i) {
      const double v = lum[(j - 1) * 4 + i] + lum[(j + 1) * 4 + i] + lum[j * 4 + i - 1] +
                       lum[j * 4 + i + 1] - 4.0 * lum[j * 4 + i];
      resp.push_back(v);
    }
  double mean = 0.0;
  for (double v : resp) mean += v;
  mean /= resp.size();
  double var = 0.0;
  for (double v : resp) var += (v - mean) * (v - mean);
  var /= resp.size();

  const FeatureVector f = extract_features(vp);
  CHECK(f[2] == Catch::Approx(var).epsilon(1e-12));
}

TEST_CASE("gradient magnitude is exact on a linear ramp", "[features]") {
  std::vector<double> lum(64);
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) lum[j * 8 + i] = 10.0 * i;
  const FeatureVector f = extract_features(make_viewport(8, 8, lum));
  CHECK(f[3] == Catch::Approx(10.0).margin(1e-9));
  CHECK(f[2] == Catch::Approx(0.0).margin(1e-9));  // ramp is laplacian-free
}

TEST_CASE("blur strictly shrinks laplacian variance", "[features]") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Viewport vp = random_viewport(rng, 32, 32);
    const Viewport blurred = blur_viewport(vp, 1.5);
    const double before = extract_features(vp)[2];
    const double after = extract_features(blurred)[2];
    REQUIRE(after < before);
  }
}

TEST_CASE("high frequency ratio stays in [0, 1]", "[features]") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const FeatureVector f = extract_features(random_viewport(rng, 24, 24));
    REQUIRE(f[4] >= 0.0);
    REQUIRE(f[4] <= 1.0);
  }
  // the worst case: single-pixel checkerboard
  std::vector<double> lum(32 * 32);
  for (int j = 0; j < 32; ++j)
    for (int i = 0; i < 32; ++i) lum[j * 32 + i] = ((i + j) % 2) ? 255.0 : 0.0;
  const FeatureVector f = extract_features(make_viewport(32, 32, lum));
  CHECK(f[4] <= 1.0);
  CHECK(f[4] > 0.1);
}

TEST_CASE("all features stay finite on random input", "[features]") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const FeatureVector f = extract_features(random_viewport(rng, 17, 9));
    for (double v : f) REQUIRE(std::isfinite(v));
  }
}
