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

#include "panobench/analysis.hpp"
#include "panobench/rng.hpp"

using namespace panobench;

TEST_CASE("gap arithmetic on the named cells", "[analysis]") {
  CHECK(*gap_percent(0.917, 0.725) == Catch::Approx(-20.9).margin(0.05));
  CHECK(*gap_percent(0.901, 0.834) == Catch::Approx(-7.4).margin(0.05));
  CHECK(*gap_percent(0.5, 0.5) == 0.0);
  CHECK_FALSE(gap_percent(0.0, 0.4).has_value());
}

TEST_CASE("gap is exactly scale-covariant", "[analysis]") {
  CHECK(*gap_percent(0.5, 0.5 * 1.25) == 25.0);
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const double p = 0.05 + rng.next_double();
    const double r = (rng.next_double() - 0.5) * 2.0;
    CHECK(*gap_percent(p, p * (1.0 + r)) == Catch::Approx(100.0 * r).margin(1e-9));
  }
}

TEST_CASE("mean_gap averages the defined cells only", "[analysis]") {
  std::vector<GapRecord> records;
  for (const double g : {-20.9, -21.1, -7.4, -20.3, -22.3, -27.3, -6.4}) {
    GapRecord r;
    r.gap = g;
    records.push_back(r);
  }
  CHECK(*mean_gap(records) == Catch::Approx(-18.0).margin(0.05));

  GapRecord undefined_cell;
  undefined_cell.gap = std::nullopt;
  records.push_back(undefined_cell);
  CHECK(*mean_gap(records) == Catch::Approx(-18.0).margin(0.05));

  std::vector<GapRecord> single{records[0]};
  CHECK(*mean_gap(single) == -20.9);
  CHECK_FALSE(mean_gap({undefined_cell}).has_value());
}

TEST_CASE("saturation classification thresholds", "[analysis]") {
  CHECK(classify_saturation(0.977, 0.964) == SaturationStatus::Saturated);
  CHECK(classify_saturation(0.790, 0.773) == SaturationStatus::Undersaturated);
  CHECK(classify_saturation(0.96, 0.96) == SaturationStatus::Saturated);  // inclusive edge
  CHECK(classify_saturation(0.99, 0.9599) == SaturationStatus::Intermediate);
  CHECK(classify_saturation(0.86, 0.85) == SaturationStatus::Intermediate);
  CHECK(classify_saturation(0.86, 0.8499) == SaturationStatus::Undersaturated);
  CHECK_THROWS_AS(classify_saturation(std::nan(""), 0.9), NumericError);
}

TEST_CASE("rank_from_metric orders by the chosen direction", "[analysis]") {
  const std::vector<RankedValue> perf{
      {"CVIQ", 0.361}, {"OIQA", 0.580},    {"MVAQD", 0.589},   {"IQA-ODI", 0.217},
      {"OSIQA", 0.166}, {"OIQ-10K", 0.657}, {"JUFE-10K", 0.397}};
  const std::vector<int> ranks = rank_from_metric(perf, RankDirection::HigherBetter);
  CHECK(ranks[5] == 1);  // highest mean performance ranks first
  CHECK(ranks[4] == 7);

  const std::vector<RankedValue> gaps{{"a", -50.0}, {"b", -10.0}, {"c", -30.0}};
  const std::vector<int> mag = rank_from_metric(gaps, RankDirection::LowerMagnitudeBetter);
  CHECK(mag == std::vector<int>{3, 1, 2});
}

TEST_CASE("rank_from_metric shares the better rank on exact ties", "[analysis]") {
  const std::vector<RankedValue> vals{{"a", 1.0}, {"b", 1.0}, {"c", 0.5}};
  const std::vector<int> ranks = rank_from_metric(vals, RankDirection::HigherBetter);
  CHECK(ranks == std::vector<int>{1, 1, 3});

  const std::vector<RankedValue> all_equal{{"a", 2.0}, {"b", 2.0}, {"c", 2.0}};
  const std::vector<int> flat = rank_from_metric(all_equal, RankDirection::HigherBetter);
  CHECK(flat == std::vector<int>{1, 1, 1});
}

TEST_CASE("rank_from_metric rejects undefined values by name", "[analysis]") {
  const std::vector<RankedValue> vals{{"ok", 1.0}, {"broken", std::nan("")}};
  try {
    rank_from_metric(vals, RankDirection::HigherBetter);
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()).find("broken") != std::string::npos);
  }
}

TEST_CASE("aggregate_ranks reproduces the published final column", "[analysis]") {
  const std::vector<std::string> dbs{"OIQ-10K", "JUFE-10K", "MVAQD", "OIQA",
                                     "OSIQA",  "IQA-ODI",  "CVIQ"};
  const std::vector<std::vector<int>> cols{
      {4, 2, 5, 6, 1, 3, 7},  // Q1
      {2, 1, 4, 6, 3, 5, 7},  // Q2
      {1, 4, 3, 2, 7, 6, 5},  // Q3
      {1, 4, 3, 2, 7, 6, 5},  // T
  };
  const std::vector<int> final_rank = aggregate_ranks(cols, dbs);
  CHECK(final_rank == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("aggregate_ranks with identical perspectives returns them unchanged", "[analysis]") {
  const std::vector<std::string> names{"a", "b", "c", "d"};
  const std::vector<int> col{3, 1, 4, 2};
  CHECK(aggregate_ranks({col, col, col, col}, names) == col);
}

TEST_CASE("aggregate_ranks breaks mean ties by the best single rank", "[analysis]") {
  // means: a = (1+4)/2 = 2.5, b = (2+3)/2 = 2.5, c = (3+2)/2 = 2.5... craft distinct
  const std::vector<std::string> names{"a", "b", "c"};
  const std::vector<std::vector<int>> cols{{1, 2, 3}, {3, 2, 1}};
  // means are 2, 2, 2; best single ranks are 1, 2, 1; name breaks a vs c
  const std::vector<int> final_rank = aggregate_ranks(cols, names);
  CHECK(final_rank == std::vector<int>{1, 3, 2});
}

TEST_CASE("aggregate_ranks validates permutations", "[analysis]") {
  CHECK_THROWS_AS(aggregate_ranks({{1, 1, 3}}, {"a", "b", "c"}), std::invalid_argument);
  CHECK_THROWS_AS(aggregate_ranks({{1, 2}}, {"a", "b", "c"}), std::invalid_argument);
}

TEST_CASE("cross matrix computes gains and per-target means", "[analysis]") {
  CrossMatrix m;
  m.source_database = "src";
  m.models = {"m1", "m2"};
  m.targets = {"t1"};
  m.insert("m1", "t1", Metric::Plcc, 0.951, 0.424);
  m.insert("m2", "t1", Metric::Plcc, 0.8, 0.4);
  m.insert("m1", "t1", Metric::Srcc, 0.914, 0.386);
  m.insert("m2", "t1", Metric::Srcc, 0.9, 0.45);
  m.finalize_means();

  CHECK(*m.cells.at({"m1", "t1", Metric::Plcc}).gain == Catch::Approx(-55.4).margin(0.05));
  const double want_mean = ((0.424 - 0.951) / 0.951 + (0.4 - 0.8) / 0.8) * 50.0;
  CHECK(m.mean_gain.at({"t1", Metric::Plcc}) == Catch::Approx(want_mean).margin(1e-12));

  // identity transfer has zero gain
  CrossMatrix diag;
  diag.models = {"m"};
  diag.targets = {"src"};
  diag.insert("m", "src", Metric::Plcc, 0.7, 0.7);
  CHECK(*diag.cells.at({"m", "src", Metric::Plcc}).gain == 0.0);
}
