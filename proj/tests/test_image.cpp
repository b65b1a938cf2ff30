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

#include <catch2/catch_amalgamated.hpp>

#include "panobench/image.hpp"
#include "panobench/image_io.hpp"
#include "panobench/procedural.hpp"
#include "panobench/rng.hpp"

using namespace panobench;
namespace fs = std::filesystem;

TEST_CASE("erp validation enforces the raster invariants", "[image]") {
  CHECK_NOTHROW(make_constant_erp(64, 32, "ok", {1, 2, 3}));
  CHECK_THROWS_AS(make_erp(64, 30, "aspect", std::vector<std::uint8_t>(64 * 30 * 3)),
                  DataError);
  CHECK_NOTHROW(make_erp(64, 30, "aspect", std::vector<std::uint8_t>(64 * 30 * 3),
                         /*allow_any_aspect=*/true));
  CHECK_THROWS_AS(make_erp(8, 4, "tiny", std::vector<std::uint8_t>(8 * 4 * 3)), DataError);
  CHECK_THROWS_AS(make_erp(64, 32, "short", std::vector<std::uint8_t>(10)), DataError);
}

TEST_CASE("sample_bilinear is exact on constants and texel centers", "[image]") {
  const ErpImage gray = make_constant_erp(64, 32, "gray", {90, 140, 200});
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto rgb = sample_bilinear(gray, rng.next_double() * 64, rng.next_double() * 32);
    CHECK(rgb[0] == 90.0);
    CHECK(rgb[1] == 140.0);
    CHECK(rgb[2] == 200.0);
  }

  ErpImage img = make_constant_erp(64, 32, "img", {0, 0, 0});
  img.pixel(10, 7)[0] = 201;
  const auto rgb = sample_bilinear(img, 10.5, 7.5);
  CHECK(rgb[0] == 201.0);
}

TEST_CASE("sample_bilinear interpolates midpoints linearly", "[image]") {
  ErpImage img = make_constant_erp(64, 32, "img", {0, 0, 0});
  img.pixel(10, 7)[0] = 0;
  img.pixel(11, 7)[0] = 100;
  const auto rgb = sample_bilinear(img, 11.0, 7.5);  // halfway between texels 10 and 11
  CHECK(rgb[0] == 50.0);
}

TEST_CASE("sample_bilinear wraps horizontally and clamps at poles", "[image]") {
  const ErpImage img = generate_panorama(99, 64, 32, "tex");
  Rng rng(4);
  for (int k = 0; k < 300; ++k) {
    // dyadic offsets stay exactly representable after adding the width, so
    // the wraparound identity holds bit for bit
    const double u = static_cast<double>(rng.next_below(64 * 1024)) / 1024.0;
    const double v = rng.next_double() * 32;
    const auto a = sample_bilinear(img, u, v);
    const auto b = sample_bilinear(img, u + 64.0, v);
    for (int c = 0; c < 3; ++c) CHECK(a[c] == b[c]);
  }
  for (int k = 0; k < 300; ++k) {
    const double u = rng.next_double() * 64;
    const double v = rng.next_double() * 32;
    const auto a = sample_bilinear(img, u, v);
    const auto b = sample_bilinear(img, u + 64.0, v);
    for (int c = 0; c < 3; ++c) CHECK(a[c] == Catch::Approx(b[c]).margin(1e-9));
  }
  // above the top row and below the bottom row the value stays finite and
  // equals the clamped row
  const auto top = sample_bilinear(img, 5.3, 0.0);
  const auto top_in = sample_bilinear(img, 5.3, 0.5);
  CHECK(top[0] == top_in[0]);
}

TEST_CASE("sample_bilinear stays within the hull of its neighbors", "[image]") {
  const ErpImage img = generate_panorama(123, 64, 32, "tex");
  Rng rng(5);
  for (int k = 0; k < 500; ++k) {
    const double u = rng.next_double() * 64;
    const double v = rng.next_double() * 32;
    const auto rgb = sample_bilinear(img, u, v);
    for (int c = 0; c < 3; ++c) {
      CHECK(rgb[c] >= 0.0);
      CHECK(rgb[c] <= 255.0);
    }
  }
}

TEST_CASE("png round trip preserves samples", "[image][io]") {
  const fs::path dir = fs::temp_directory_path() / "panobench_io_test";
  fs::create_directories(dir);
  const ErpImage img = generate_panorama(42, 64, 32, "roundtrip");
  const std::string path = (dir / "roundtrip.png").string();
  save_png(img, path);
  const ErpImage back = load_erp(path);
  REQUIRE(back.width == img.width);
  REQUIRE(back.height == img.height);
  CHECK(back.data == img.data);
  CHECK(back.id == "roundtrip");
  fs::remove_all(dir);
}

TEST_CASE("loader rejects non equirectangular aspect without the override", "[image][io]") {
  const fs::path dir = fs::temp_directory_path() / "panobench_io_aspect";
  fs::create_directories(dir);
  ErpImage odd = make_erp(64, 30, "odd", std::vector<std::uint8_t>(64 * 30 * 3, 7), true);
  const std::string path = (dir / "odd.png").string();
  save_png(odd, path);
  CHECK_THROWS_AS(load_erp(path), DataError);
  CHECK_NOTHROW(load_erp(path, /*allow_any_aspect=*/true));
  fs::remove_all(dir);
}

TEST_CASE("viewport quantization rounds to nearest and clamps", "[image]") {
  Viewport vp;
  vp.width = 2;
  vp.height = 1;
  vp.data = {127.4f, 127.5f, -3.0f, 300.0f, 0.0f, 254.6f};
  const std::vector<std::uint8_t> q = quantize_viewport(vp);
  CHECK(q == std::vector<std::uint8_t>{127, 128, 0, 255, 0, 255});
}
