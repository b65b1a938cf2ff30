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

#include "panobench/correlation.hpp"
#include "panobench/rng.hpp"
#include "support/oracles.hpp"

using namespace panobench;

namespace {

double oracle_srcc(const std::vector<double>& x, const std::vector<double>& y) {
  return oracles::srcc(x, y);
}

std::vector<double> random_vector(Rng& rng, std::size_t n, bool with_ties) {
  std::vector<double> v(n);
  for (double& x : v)
    x = with_ties ? static_cast<double>(rng.next_below(10)) : rng.next_double() * 10.0;
  return v;
}

}  // namespace

TEST_CASE("srcc hand example evaluates to exactly 0.9", "[correlation]") {
  const std::vector<double> pred{1, 2, 3, 5, 4};
  const std::vector<double> mos{1, 2, 3, 4, 5};
  CHECK(srcc(pred, mos) == 0.9);
}

TEST_CASE("srcc is 1 on monotone data and -1 on antitone data", "[correlation]") {
  const std::vector<double> up{0.1, 0.5, 2.0, 7.7, 100.0};
  std::vector<double> down = up;
  std::reverse(down.begin(), down.end());
  CHECK(srcc(up, up) == 1.0);
  CHECK(srcc(up, down) == -1.0);
}

TEST_CASE("srcc matches the tie-handling formula on ties", "[correlation]") {
  // [1, 2, 2, 4] -> ranks [1, 2.5, 2.5, 4]
  const std::vector<double> x{1, 2, 2, 4};
  const auto r = average_ranks(x);
  CHECK(r == std::vector<double>{1.0, 2.5, 2.5, 4.0});
}

TEST_CASE("srcc and plcc reject bad input", "[correlation]") {
  CHECK_THROWS_AS(srcc({1, 2}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(srcc({1, 2, 3}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(pearson({1, 2}, {1, 2}), std::invalid_argument);
}

TEST_CASE("all-tied input yields the undefined sentinel", "[correlation]") {
  CHECK(std::isnan(srcc({3, 3, 3, 3}, {1, 2, 3, 4})));
  CHECK(std::isnan(pearson({3, 3, 3}, {1, 2, 3})));
  const EvalReport rep = evaluate_scores({3, 3, 3, 3}, {1, 2, 3, 4}, false);
  CHECK(std::isnan(rep.plcc));
  CHECK_FALSE(rep.diagnostic.empty());
}

TEST_CASE("pearson hand examples", "[correlation]") {
  CHECK(pearson({1, 2, 3}, {2, 4, 6}) == 1.0);
  CHECK(pearson({1, 2, 3, 4}, {1, 3, 2, 4}) == 0.8);
}

TEST_CASE("srcc agrees with the brute-force oracle", "[correlation]") {
  Rng rng(1000);
  double max_err = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng.next_below(198);
    const bool ties = trial % 2 == 0;
    std::vector<double> x = random_vector(rng, n, ties);
    std::vector<double> y = random_vector(rng, n, ties);
    const double mine = srcc(x, y);
    const double want = oracle_srcc(x, y);
    if (std::isnan(mine) || std::isnan(want)) {
      REQUIRE(std::isnan(mine) == std::isnan(want));
      continue;
    }
    max_err = std::max(max_err, std::abs(mine - want));
  }
  CHECK(max_err < 1e-12);
}

TEST_CASE("correlations are invariant under monotone transforms", "[correlation]") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 5 + rng.next_below(60);
    std::vector<double> x = random_vector(rng, n, false);
    std::vector<double> y = random_vector(rng, n, false);
    const double base_srcc = srcc(x, y);
    const double base_plcc = pearson(x, y);

    std::vector<double> affine = x;
    for (double& v : affine) v = 2.5 * v + 17.0;
    CHECK(std::abs(pearson(affine, y) - base_plcc) < 1e-12);
    CHECK(std::abs(srcc(affine, y) - base_srcc) < 1e-12);

    std::vector<double> cubed = x;
    for (double& v : cubed) v = v * v * v + std::exp(v / 20.0);
    CHECK(std::abs(srcc(cubed, y) - base_srcc) < 1e-12);
  }
}

TEST_CASE("correlations are symmetric under joint permutation", "[correlation]") {
  Rng rng(99);
  std::vector<double> x = random_vector(rng, 40, true);
  std::vector<double> y = random_vector(rng, 40, true);
  const double s = srcc(x, y), p = pearson(x, y);
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.next_below(i)]);
  std::vector<double> xp(x.size()), yp(y.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    xp[i] = x[idx[i]];
    yp[i] = y[idx[i]];
  }
  CHECK(std::abs(srcc(xp, yp) - s) < 1e-12);
  CHECK(std::abs(pearson(xp, yp) - p) < 1e-12);
}

TEST_CASE("logistic fit recovers noise-free logistic data", "[correlation][logistic]") {
  const LogisticParams truth{2.0, 1.5, 0.5, 0.2, 3.0};
  std::vector<double> x, y;
  double energy = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double xv = -2.0 + 4.0 * i / 19.0;
    x.push_back(xv);
    y.push_back(logistic5(truth, xv));
    energy += y.back() * y.back();
  }
  const LogisticFit fit = fit_logistic(x, y);
  CHECK(fit.converged);
  CHECK(fit.residual < 1e-6 * energy);
}

TEST_CASE("perfectly linear data gives fitted plcc of 1", "[correlation][logistic]") {
  std::vector<double> x, y;
  for (int i = 0; i < 12; ++i) {
    x.push_back(i);
    y.push_back(3.0 * i - 5.0);
  }
  const EvalReport rep = evaluate_scores(x, y, true);
  CHECK(rep.fit_converged);
  CHECK(rep.plcc == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("prefit absorbs an exact anti-monotone relation", "[correlation][logistic]") {
  std::vector<double> x, y;
  for (int i = 0; i < 10; ++i) {
    x.push_back(i);
    y.push_back(10.0 - i);
  }
  const EvalReport rep = evaluate_scores(x, y, true);
  CHECK(rep.raw_pearson == Catch::Approx(-1.0).margin(1e-12));
  CHECK(rep.plcc == Catch::Approx(1.0).margin(1e-9));
  CHECK(rep.logistic_params.b4 < 0.0);
  CHECK(rep.diagnostic.find("negative slope") != std::string::npos);
}

TEST_CASE("fitted plcc dominates raw pearson and a dense grid oracle",
          "[correlation][logistic]") {
  // fixed 20-point noisy monotone instance
  Rng rng(777);
  const LogisticParams truth{3.0, 2.0, 0.0, 0.1, 2.5};
  std::vector<double> x, y;
  for (int i = 0; i < 20; ++i) {
    const double xv = -2.0 + 4.0 * i / 19.0;
    x.push_back(xv);
    y.push_back(logistic5(truth, xv) + 0.15 * (rng.next_double() - 0.5));
  }
  const EvalReport rep = evaluate_scores(x, y, true);
  CHECK(rep.fit_converged);
  CHECK(rep.plcc >= rep.raw_pearson - 1e-9);

  // grid over (b1, b2, b3, b4) with the optimal intercept in closed form
  const LogisticFit fit = fit_logistic(x, y);
  double grid_best = std::numeric_limits<double>::infinity();
  for (double b1 = 0.0; b1 <= 5.0; b1 += 0.5) {
    for (double b2 = 0.25; b2 <= 4.0; b2 += 0.25) {
      for (double b3 = -1.5; b3 <= 1.5; b3 += 0.25) {
        for (double b4 = -0.4; b4 <= 0.6; b4 += 0.1) {
          double resid_mean = 0.0;
          for (std::size_t i = 0; i < x.size(); ++i)
            resid_mean += y[i] - logistic5({b1, b2, b3, b4, 0.0}, x[i]);
          resid_mean /= static_cast<double>(x.size());
          double sse = 0.0;
          for (std::size_t i = 0; i < x.size(); ++i) {
            const double d = logistic5({b1, b2, b3, b4, resid_mean}, x[i]) - y[i];
            sse += d * d;
          }
          grid_best = std::min(grid_best, sse);
        }
      }
    }
  }
  CHECK(fit.residual <= grid_best + 1e-9);
}

TEST_CASE("small samples fall back to raw pearson", "[correlation][logistic]") {
  const EvalReport rep = evaluate_scores({1, 2, 3}, {1.1, 1.9, 3.2}, true);
  CHECK_FALSE(rep.fit_converged);
  CHECK(rep.plcc == rep.raw_pearson);
  CHECK(rep.n == 3);
}
