// Copyright 2026 The hitset Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "hitset/core.hpp"
#include "oracles.hpp"

namespace hitset {
namespace {

using testing::contiguous_intervals;
using testing::power_set;
using testing::random_system;
using testing::triangle;

WeightVector weights(std::initializer_list<double> w) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(w.size()));
  Eigen::Index i = 0;
  for (double x : w) v[i++] = x;
  return WeightVector(v);
}

TEST_CASE("SetSystem validates its rows") {
  CHECK_THROWS_AS(SetSystem(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetSystem(3, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SetSystem(3, {{1, 1}}), std::invalid_argument);
  const SetSystem s = SetSystem::from_unsorted(4, {{3, 1, 1, 0}, {}});
  CHECK(s.range(0).size() == 3);
  CHECK(s.has_empty_range());
  CHECK(s.nnz() == 3);
  CHECK(s.ranges_containing(1).size() == 1);
  CHECK_THROWS_AS(s.range(2), std::out_of_range);
}

TEST_CASE("WeightVector normalizes and rejects bad input") {
  const WeightVector w = weights({2.0, 1.0, 1.0});
  CHECK(w[0] == doctest::Approx(0.5));
  CHECK(std::abs(w.values().sum() - 1.0) <= 1e-9);
  CHECK_THROWS_AS(weights({1.0, -0.1}), std::invalid_argument);
  CHECK_THROWS_AS(weights({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(weights({1.0, NAN}), std::invalid_argument);
}

TEST_CASE("weight_of") {
  const SetSystem s(3, {{0, 1}, {0, 2}, {1}});
  CHECK(weight_of(s, WeightVector::uniform(3), 0) == doctest::Approx(2.0 / 3.0));
  CHECK(weight_of(s, weights({0.5, 0.3, 0.2}), 1) == doctest::Approx(0.7));
  CHECK(weight_of(s, weights({1.0, 0.0, 1.0}), 2) == 0.0);
  CHECK_THROWS_AS(weight_of(s, WeightVector::uniform(3), 3), std::out_of_range);
  CHECK_THROWS_AS(weight_of(s, WeightVector::uniform(4), 0), std::invalid_argument);
}

TEST_CASE("sym_diff_weight") {
  const SetSystem s(3, {{0, 1}, {1, 2}, {0}, {1, 2}});
  const WeightVector u = WeightVector::uniform(3);
  CHECK(sym_diff_weight(s, u, 0, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(sym_diff_weight(s, u, 1, 1) == 0.0);
  CHECK(sym_diff_weight(s, u, 1, 3) == 0.0);
  CHECK(sym_diff_weight(s, weights({0.2, 0.3, 0.5}), 2, 1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(sym_diff_weight(s, u, 0, 9), std::out_of_range);
}

TEST_CASE("sym_diff_weight = mu(R) + mu(S) - 2 mu(R cap S), symmetric") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SetSystem s = random_system(15, 12, 0.4, seed, false);
    Rng rng(seed + 100);
    Eigen::VectorXd raw(15);
    for (auto& x : raw) x = 0.1 + rng.uniform();
    const WeightVector w(raw);
    for (RangeIndex i = 0; i < s.num_ranges(); ++i) {
      for (RangeIndex j = 0; j < s.num_ranges(); ++j) {
        const double lhs = sym_diff_weight(s, w, i, j);
        const double rhs = weight_of(s, w, i) + weight_of(s, w, j) -
                           2.0 * intersection_weight(s, w, i, j);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(lhs == sym_diff_weight(s, w, j, i));
        CHECK((lhs == 0.0) == (s.ranges()[i] == s.ranges()[j]));
      }
    }
  }
}

TEST_CASE("project: triangle onto {a}") {
  const Projection p = project(triangle(), PointSet{0});
  // {a,b} -> {a}, {b,c} -> {}, {a,c} -> {a}.
  REQUIRE(p.size() == 2);
  CHECK(p.traces[0] == PointSet{0});
  CHECK(p.traces[1] == PointSet{});
  CHECK(p.multiplicities() == std::vector<std::size_t>{2, 1});
  CHECK(p.sources[0] == std::vector<RangeIndex>{0, 2});
}

TEST_CASE("project: full and empty samples") {
  const SetSystem s(3, {{0, 1}, {1, 2}, {0, 1}});
  const Projection full = project(s, PointSet{0, 1, 2});
  CHECK(full.traces == std::vector<PointSet>{{0, 1}, {1, 2}});
  CHECK(full.multiplicities() == std::vector<std::size_t>{2, 1});
  const Projection empty = project(s, PointSet{});
  REQUIRE(empty.size() == 1);
  CHECK(empty.traces[0].empty());
  CHECK(empty.multiplicities() == std::vector<std::size_t>{3});
  CHECK(project(SetSystem(2, {}), PointSet{}).size() == 0);
  CHECK_THROWS_AS(project(s, PointSet{3}), std::out_of_range);
  CHECK_THROWS_AS(project(s, PointSet{1, 0}), std::invalid_argument);
}

TEST_CASE("project is idempotent and respects the Sauer-Shelah bound") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const SetSystem s = random_system(10, 25, 0.35, seed, false);
    Rng rng(seed);
    PointSet y;
    for (PointIndex j = 0; j < 10; ++j) {
      if (rng.bernoulli(0.5)) y.push_back(j);
    }
    const Projection once = project(s, y);
    const Projection twice = project(once.as_system(10), y);
    CHECK(twice.traces == once.traces);
    CHECK(count_traces(s, y) == once.size());

    // Multiplicities partition the ranges.
    std::size_t total = 0;
    for (auto mult : once.multiplicities()) total += mult;
    CHECK(total == s.num_ranges());
    CHECK(once.size() <= std::min<std::size_t>(s.num_ranges(), 1U << y.size()));

    const std::size_t d = vc_dimension_exact(s).value;
    CHECK(once.size() <= sauer_bound(y.size(), d));
  }
}

TEST_CASE("vc_dimension_exact: named examples") {
  // Every pair {i, j} is shattered by contiguous intervals; no triple is,
  // because no interval contains the outer two without the middle one.
  CHECK(oracle::vc_dimension(contiguous_intervals(4)) == 2);
  CHECK(vc_dimension_exact(contiguous_intervals(4)).value == 2);
  // Only the trace {0} exists on {0}; the empty trace is missing.
  CHECK(oracle::vc_dimension(SetSystem(1, {{0}})) == 0);
  CHECK(vc_dimension_exact(SetSystem(1, {{0}})).value == 0);
  CHECK(vc_dimension_exact(SetSystem(1, {{0}, {}})).value == 1);
  CHECK(vc_dimension_exact(power_set(3)).value == 3);
  CHECK(vc_dimension_exact(SetSystem(4, {})).value == 0);
}

TEST_CASE("vc_dimension_exact agrees with brute force") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const SetSystem s = random_system(8, 6 + seed % 20, 0.5, seed, false);
    const auto vc = vc_dimension_exact(s);
    CHECK(vc.exact);
    CHECK(vc.value == oracle::vc_dimension(s));
  }
}

TEST_CASE("vc_dimension_exact: size limit and cap") {
  const SetSystem big = contiguous_intervals(25);
  CHECK_THROWS_AS(vc_dimension_exact(big), std::invalid_argument);
  const auto capped = vc_dimension_exact(big, 5);
  CHECK(capped.exact);
  CHECK(capped.value == 2);
  const auto hit_cap = vc_dimension_exact(power_set(4), 2);
  CHECK_FALSE(hit_cap.exact);
  CHECK(hit_cap.value == 3);
  CHECK(vc_dimension_exact(power_set(4), 4).value == 4);
}

TEST_CASE("sauer_bound") {
  CHECK(sauer_bound(5, 0) == 1);
  CHECK(sauer_bound(5, 2) == 1 + 5 + 10);
  CHECK(sauer_bound(3, 7) == 8);
  CHECK(sauer_bound(60, 30) > 0);
}

TEST_CASE("count_shallow_cells: named examples") {
  const SetSystem dup(4, {{0, 1}, {0, 1}, {2}, {1, 2, 3}});
  CHECK(count_shallow_cells(dup, nullptr, 4, 4, 0, 0) == 3);

  // At most 3 columns of the triangle: the 2-column submatrix on {a, b}
  // has rows 11, 01, 10, of which 01 and 10 have depth <= 1.
  CHECK(oracle::shallow_cells(triangle(), 3, 1) == 2);
  CHECK(count_shallow_cells(triangle(), nullptr, 3, 1, 0, 0) == 2);

  // k = 0: only the all-zero row counts, and the empty column set yields it.
  CHECK(count_shallow_cells(triangle(), nullptr, 3, 0, 0, 0) == 1);
  CHECK_THROWS_AS(count_shallow_cells(triangle(), nullptr, 4, 1, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("count_shallow_cells matches brute force for m <= 12") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const SetSystem s = random_system(7 + seed % 5, 15, 0.3, seed, false);
    for (std::size_t l = 0; l <= s.num_points(); l += 2) {
      for (std::size_t k = 0; k <= l; ++k) {
        CHECK(count_shallow_cells(s, nullptr, l, k, 0, 0) ==
              oracle::shallow_cells(s, l, k));
      }
    }
  }
}

TEST_CASE("count_shallow_cells is monotone in l and k") {
  const SetSystem small = random_system(10, 30, 0.3, 5);
  const SetSystem large = random_system(30, 40, 0.2, 6);
  const WeightVector w = WeightVector::uniform(30);
  for (const SetSystem* s : {&small, &large}) {
    std::size_t prev_l = 0;
    for (std::size_t l = 1; l <= 10; ++l) {
      const std::size_t at_l = count_shallow_cells(*s, nullptr, l, 3, 8, 42);
      CHECK(at_l >= prev_l);
      prev_l = at_l;
      std::size_t prev_k = 0;
      for (std::size_t k = 0; k <= l; ++k) {
        const std::size_t at_k = count_shallow_cells(*s, nullptr, l, k, 8, 42);
        CHECK(at_k >= prev_k);
        prev_k = at_k;
      }
    }
  }
  // All columns, no depth limit: one cell per distinct range.
  PointSet all(30);
  std::iota(all.begin(), all.end(), PointIndex{0});
  CHECK(count_shallow_cells(large, &w, 30, 30, 4, 1) == project(large, all).size());
}

}  // namespace
}  // namespace hitset
