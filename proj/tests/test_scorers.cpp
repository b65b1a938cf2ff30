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

#include "panobench/rng.hpp"
#include "panobench/scorers.hpp"

using namespace panobench;

namespace {

FeatureVector random_feature(Rng& rng) {
  FeatureVector f;
  for (double& v : f) v = rng.next_double() * 100.0;
  return f;
}

// independent gauss-jordan solve of the ridge normal equations, intercept
// unpenalized, replicated from the contract rather than the implementation
std::pair<std::array<double, 5>, double> oracle_ridge(
    const std::vector<FeatureVector>& xs, const std::vector<double>& ys, double lambda) {
  const int n = static_cast<int>(xs.size());
  std::array<double, 5> mean{}, sd{};
  for (int k = 0; k < 5; ++k) {
    for (int i = 0; i < n; ++i) mean[k] += xs[i][k];
    mean[k] /= n;
    for (int i = 0; i < n; ++i) sd[k] += (xs[i][k] - mean[k]) * (xs[i][k] - mean[k]);
    sd[k] = std::sqrt(sd[k] / n);
    if (sd[k] <= 0.0) sd[k] = 1.0;
  }
  // 6x6 system over [z, 1]
  double a[6][7] = {};
  for (int i = 0; i < n; ++i) {
    double z[6];
    for (int k = 0; k < 5; ++k) z[k] = (xs[i][k] - mean[k]) / sd[k];
    z[5] = 1.0;
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) a[r][c] += z[r] * z[c];
      a[r][6] += z[r] * ys[i];
    }
  }
  for (int k = 0; k < 5; ++k) a[k][k] += lambda;
  for (int col = 0; col < 6; ++col) {  // gauss-jordan with partial pivoting
    int pivot = col;
    for (int r = col + 1; r < 6; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    const double d = a[col][col];
    for (int c = 0; c <= 6; ++c) a[col][c] /= d;
    for (int r = 0; r < 6; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      for (int c = 0; c <= 6; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::array<double, 5> w{a[0][6], a[1][6], a[2][6], a[3][6], a[4][6]};
  return {w, a[5][6]};
}

}  // namespace

TEST_CASE("score_viewport applies weights, bias and normalizer", "[scorers]") {
  LinearScorer s;
  s.bias = 3.7;
  FeatureVector f{128, 1, 2, 3, 0.4};
  CHECK(score_viewport(s, f) == 3.7);

  s.weights = {1, 0, 0, 0, 0};
  s.bias = 0.0;
  CHECK(score_viewport(s, f) == 128.0);
}

TEST_CASE("pool_scores is the arithmetic mean", "[scorers]") {
  CHECK(pool_scores(std::vector<double>(8, 4.0)) == 4.0);
  CHECK(pool_scores({1, 2, 3, 4, 5, 6, 7, 8}) == 4.5);
  CHECK_THROWS_AS(pool_scores({}), std::invalid_argument);

  Rng rng(2);
  std::vector<double> v(9);
  for (double& x : v) x = rng.next_double();
  const double base = pool_scores(v);
  for (int k = v.size(); k > 1; --k) std::swap(v[k - 1], v[rng.next_below(k)]);
  CHECK(pool_scores(v) == Catch::Approx(base).margin(1e-12));
  CHECK(base >= *std::min_element(v.begin(), v.end()));
  CHECK(base <= *std::max_element(v.begin(), v.end()));
}

TEST_CASE("recurrent aggregation follows the sigmoid recurrence", "[scorers]") {
  // zero weights: every state entry is sigmoid(0) = 1/2
  const auto zero = RecurrentAggregator::scalar_profile(3, 0.0, 0.0, 0.0);
  const auto h = aggregate_recurrent(zero, {{1, 2, 3}, {4, 5, 6}});
  for (double v : h) CHECK(v == 0.5);

  // scalar case: h1 = sigmoid(1)
  const auto unit = RecurrentAggregator::scalar_profile(1, 1.0, 1.0, 0.0);
  const auto h1 = aggregate_recurrent(unit, {{1.0}});
  CHECK(h1[0] == Catch::Approx(0.7310585786300049).margin(1e-15));

  // with W_h = 0 the final state depends only on the last input
  const auto memoryless = RecurrentAggregator::scalar_profile(2, 0.0, 1.0, 0.0);
  const auto a = aggregate_recurrent(memoryless, {{9, 9}, {1, 2}});
  const auto b = aggregate_recurrent(memoryless, {{-3, 0}, {1, 2}});
  CHECK(a == b);
}

TEST_CASE("recurrent states stay strictly inside (0, 1)", "[scorers]") {
  Rng rng(8);
  const auto agg = RecurrentAggregator::default_profile(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<double>> xs;
    for (int m = 0; m < 8; ++m) {
      std::vector<double> x(5);
      for (double& v : x) v = (rng.next_double() - 0.5) * 200.0;
      xs.push_back(x);
    }
    for (double v : aggregate_recurrent(agg, xs)) {
      REQUIRE(v > 0.0);
      REQUIRE(v < 1.0);
    }
  }
}

TEST_CASE("aggregate_recurrent validates shapes", "[scorers]") {
  const auto agg = RecurrentAggregator::scalar_profile(3, 0.5, 1.0, 0.0);
  CHECK_THROWS_AS(aggregate_recurrent(agg, {}), std::invalid_argument);
  CHECK_THROWS_AS(aggregate_recurrent(agg, {{1.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("integrated head reduces to a constant with zero weights", "[scorers]") {
  const auto agg = RecurrentAggregator::default_profile(2);
  CHECK(score_integrated({0, 0}, 4.2, agg, {{1, 2}, {3, 4}}) == 4.2);
}

TEST_CASE("integrated mapping shrugs off an early-viewport defect that partial mapping dilutes",
          "[scorers]") {
  const int viewports = 8;
  const std::vector<double> clean_x{10, 20, 1000, 5, 0.02};
  std::vector<std::vector<double>> clean(viewports, clean_x);
  std::vector<std::vector<double>> damaged = clean;
  damaged[0] = {10, 5, 10, 1, 0.001};  // only viewport m=0 is distorted

  // partial mapping: linear score per viewport, then average pooling
  LinearScorer lin;
  lin.weights = {0.1, 0.2, 0.001, 0.3, 5.0};
  auto partial = [&](const std::vector<std::vector<double>>& xs) {
    std::vector<double> per;
    for (const auto& x : xs) {
      FeatureVector f{x[0], x[1], x[2], x[3], x[4]};
      per.push_back(score_viewport(lin, f));
    }
    return pool_scores(per);
  };

  const auto agg = RecurrentAggregator::default_profile(5);
  const std::vector<double> head{1, 1, 1, 1, 1};
  auto integrated = [&](const std::vector<std::vector<double>>& xs) {
    return score_integrated(head, 0.0, agg, xs);
  };

  const double partial_delta = std::abs(partial(clean) - partial(damaged));
  const double integrated_delta = std::abs(integrated(clean) - integrated(damaged));
  CHECK(partial(clean) != partial(damaged));
  // the recency-weighted state has all but forgotten viewport 0
  CHECK(integrated_delta < partial_delta);
  CHECK(integrated_delta < 1e-3);
}

TEST_CASE("identical viewports with no recurrence behave like one viewport", "[scorers]") {
  const auto memoryless = RecurrentAggregator::scalar_profile(2, 0.0, 1.0, 0.0);
  const std::vector<double> head{0.5, -0.25};
  const double one = score_integrated(head, 1.0, memoryless, {{2.0, 3.0}});
  const double many = score_integrated(head, 1.0, memoryless,
                                       {{2.0, 3.0}, {2.0, 3.0}, {2.0, 3.0}});
  CHECK(one == many);
}

TEST_CASE("training reproduces an exactly linear target", "[scorers][train]") {
  Rng rng(21);
  std::vector<TrainingExample> examples;
  const std::array<double, 5> w{0.5, -1.0, 0.25, 2.0, -3.0};
  for (int i = 0; i < 24; ++i) {
    const FeatureVector f = random_feature(rng);
    double mos = 1.0;
    for (int k = 0; k < 5; ++k) mos += w[k] * f[k];
    examples.push_back({{f}, mos});
  }
  const LinearScorer s = train_linear_scorer(examples, 1e-12);
  for (const TrainingExample& e : examples)
    CHECK(score_viewport(s, e.viewport_features[0]) ==
          Catch::Approx(e.mos).margin(1e-6 * std::abs(e.mos)));
}

TEST_CASE("constant targets train to a constant predictor", "[scorers][train]") {
  Rng rng(22);
  std::vector<TrainingExample> examples;
  for (int i = 0; i < 10; ++i) examples.push_back({{random_feature(rng)}, 2.5});
  const LinearScorer s = train_linear_scorer(examples);
  for (double wk : s.weights) CHECK(std::abs(wk) < 1e-6);
  CHECK(score_viewport(s, random_feature(rng)) == Catch::Approx(2.5).margin(1e-4));
}

TEST_CASE("training matches the normal-equations oracle", "[scorers][train]") {
  Rng rng(23);
  std::vector<TrainingExample> examples;
  std::vector<FeatureVector> xs;
  std::vector<double> ys;
  for (int i = 0; i < 20; ++i) {
    const FeatureVector f = random_feature(rng);
    const double mos = 3.0 + 0.01 * f[0] - 0.02 * f[1] + rng.next_double();
    examples.push_back({{f}, mos});
    xs.push_back(f);
    ys.push_back(mos);
  }
  const LinearScorer s = train_linear_scorer(examples, 1e-3);
  const auto [w_oracle, b_oracle] = oracle_ridge(xs, ys, 1e-3);
  for (int i = 0; i < 20; ++i) {
    double z_pred = b_oracle;
    for (int k = 0; k < 5; ++k)
      z_pred += w_oracle[k] * (xs[i][k] - s.normalizer.means[k]) / s.normalizer.stds[k];
    CHECK(score_viewport(s, xs[i]) == Catch::Approx(z_pred).margin(1e-8));
  }
}

TEST_CASE("training is invariant to per-feature rescaling", "[scorers][train]") {
  Rng rng(24);
  std::vector<TrainingExample> base;
  for (int i = 0; i < 15; ++i) {
    const FeatureVector f = random_feature(rng);
    base.push_back({{f}, 1.0 + 0.03 * f[2] + 0.002 * f[4] + 0.1 * rng.next_double()});
  }
  std::vector<TrainingExample> scaled = base;
  for (TrainingExample& e : scaled)
    for (FeatureVector& f : e.viewport_features) f[2] *= 40.0;

  const LinearScorer s1 = train_linear_scorer(base);
  const LinearScorer s2 = train_linear_scorer(scaled);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double p1 = score_viewport(s1, base[i].viewport_features[0]);
    const double p2 = score_viewport(s2, scaled[i].viewport_features[0]);
    CHECK(p1 == Catch::Approx(p2).margin(1e-6));
  }
}

TEST_CASE("training needs at least dimension + 1 examples", "[scorers][train]") {
  Rng rng(25);
  std::vector<TrainingExample> few;
  for (int i = 0; i < 5; ++i) few.push_back({{random_feature(rng)}, 1.0});
  CHECK_THROWS_AS(train_linear_scorer(few), ConfigError);
}

TEST_CASE("scorer documents round-trip through json", "[scorers][serialize]") {
  Rng rng(26);
  std::vector<TrainingExample> examples;
  for (int i = 0; i < 12; ++i)
    examples.push_back({{random_feature(rng)}, rng.next_double() * 5.0});
  const LinearScorer s = train_linear_scorer(examples);
  const LinearScorer back = scorer_from_json(scorer_to_json(s));
  const FeatureVector probe = random_feature(rng);
  CHECK(score_viewport(s, probe) == score_viewport(back, probe));

  nlohmann::json bad = scorer_to_json(s);
  bad["version"] = 99;
  CHECK_THROWS_AS(scorer_from_json(bad), ConfigError);
}

TEST_CASE("ws-psnr analytic cases", "[scorers][wspsnr]") {
  // identical rasters: +inf, capped to 100 for reports
  const ErpImage img = make_constant_erp(64, 32, "a", {10, 20, 30});
  CHECK(std::isinf(ws_psnr(img, img)));
  CHECK(capped_db(ws_psnr(img, img)) == 100.0);

  // uniform integer difference d: weights cancel, psnr = 10 log10(255^2/d^2)
  const ErpImage base = make_constant_erp(64, 32, "b", {100, 100, 100});
  const ErpImage off = make_constant_erp(64, 32, "c", {117, 117, 117});
  CHECK(ws_psnr(base, off) ==
        Catch::Approx(10.0 * std::log10(255.0 * 255.0 / (17.0 * 17.0))).margin(1e-9));
}

TEST_CASE("ws-psnr single differing pixel matches hand summation", "[scorers][wspsnr]") {
  ErpImage x = make_constant_erp(16, 8, "x", {0, 0, 0});
  ErpImage y = x;
  y.pixel(3, 1)[2] = 40;  // one channel of one pixel, row j=1

  double wsum = 0.0;
  for (int j = 0; j < 8; ++j) wsum += std::cos((j + 0.5 - 4.0) * kPi / 8.0);
  const double w1 = std::cos((1 + 0.5 - 4.0) * kPi / 8.0);
  const double mse = w1 * 40.0 * 40.0 / (3.0 * 16.0 * wsum);
  CHECK(ws_psnr(x, y) == Catch::Approx(10.0 * std::log10(255.0 * 255.0 / mse)).margin(1e-10));
}

TEST_CASE("vp-psnr pools per-viewport psnr", "[scorers][psnr]") {
  Rng rng(31);
  std::vector<Viewport> test(3), ref(3);
  for (int m = 0; m < 3; ++m) {
    test[m].width = ref[m].width = 8;
    test[m].height = ref[m].height = 8;
    test[m].data.resize(8 * 8 * 3);
    ref[m].data.resize(8 * 8 * 3);
    for (std::size_t i = 0; i < test[m].data.size(); ++i) {
      ref[m].data[i] = static_cast<float>(rng.next_below(256));
      test[m].data[i] = std::min(255.0f, ref[m].data[i] + static_cast<float>(m));
    }
  }
  // brute force: mean of the three individual psnr values (capped)
  double want = 0.0;
  for (int m = 0; m < 3; ++m) {
    double mse = 0.0;
    for (std::size_t i = 0; i < test[m].data.size(); ++i) {
      const double d = test[m].data[i] - ref[m].data[i];
      mse += d * d;
    }
    mse /= static_cast<double>(test[m].data.size());
    want += mse <= 0.0 ? 100.0 : std::min(100.0, 10.0 * std::log10(255.0 * 255.0 / mse));
  }
  want /= 3.0;
  CHECK(score_vp_psnr(test, ref) == Catch::Approx(want).margin(1e-9));
}

TEST_CASE("sharpness scorer decreases under blur", "[scorers][sharpness]") {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    Viewport vp;
    vp.width = vp.height = 24;
    vp.data.resize(24 * 24 * 3);
    for (float& v : vp.data) v = static_cast<float>(rng.next_below(256));
    // crude 3x3 box blur as the degradation
    Viewport blurred = vp;
    for (int j = 1; j < 23; ++j)
      for (int i = 1; i < 23; ++i)
        for (int c = 0; c < 3; ++c) {
          double acc = 0.0;
          for (int dj = -1; dj <= 1; ++dj)
            for (int di = -1; di <= 1; ++di)
              acc += vp.data[((j + dj) * 24 + i + di) * 3 + c];
          blurred.data[(j * 24 + i) * 3 + c] = static_cast<float>(acc / 9.0);
        }
    CHECK(score_sharpness({blurred}) < score_sharpness({vp}));
  }
}

TEST_CASE("noise scorer ranks the noisier viewport lower", "[scorers][noise]") {
  Rng rng(33);
  Viewport clean;
  clean.width = clean.height = 32;
  clean.data.assign(32 * 32 * 3, 100.0f);
  Viewport noisy = clean;
  for (float& v : noisy.data) v += static_cast<float>(5.0 * rng.next_normal());
  Viewport noisier = clean;
  for (float& v : noisier.data) v += static_cast<float>(25.0 * rng.next_normal());
  CHECK(score_noise_mad({noisy}) < score_noise_mad({clean}));
  CHECK(score_noise_mad({noisier}) < score_noise_mad({noisy}));
}

TEST_CASE("the scorer catalog names the shipped scorers", "[scorers]") {
  CHECK(find_scorer("composite") != nullptr);
  CHECK(find_scorer("composite")->trainable);
  CHECK(find_scorer("vp-psnr")->needs_reference);
  CHECK(find_scorer("ws-psnr")->needs_reference);
  CHECK_FALSE(find_scorer("sharpness")->needs_reference);
  CHECK(find_scorer("nope") == nullptr);
}
