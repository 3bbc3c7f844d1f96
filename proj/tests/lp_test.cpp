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

#include "doctest.h"
#include "fixtures.hpp"
#include "hitset/baselines.hpp"
#include "hitset/error.hpp"
#include "hitset/lp.hpp"
#include "hitset/simplex.hpp"
#include "oracles.hpp"

namespace hitset {
namespace {

using testing::random_system;
using testing::singletons;
using testing::triangle;

void check_invariants(const SetSystem& s, const LpSolution& lp) {
  CHECK(lp.z_star >= 1.0 - 1e-9);
  CHECK(std::abs(lp.eps_star * lp.z_star - 1.0) <= 1e-9);
  CHECK(lp.mu_star.values().sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lp.y_star.sum() == doctest::Approx(lp.z_star).epsilon(1e-12));
  for (Eigen::Index j = 0; j < lp.y_star.size(); ++j) {
    CHECK(lp.y_star[j] >= 0.0);
    CHECK(lp.y_star[j] <= 1.0 + 1e-9);
  }
  for (const auto& r : s.ranges()) {
    CHECK(lp.mu_star.of(r) >= lp.eps_star - kLpFeasibilityTolerance);
  }
}

TEST_CASE("solve_lp: hand-worked examples") {
  const auto one = solve_lp(SetSystem(3, {{0, 1, 2}}));
  CHECK(one.z_star == doctest::Approx(1.0));
  CHECK(one.eps_star == doctest::Approx(1.0));

  const auto tri = solve_lp(triangle());
  CHECK(tri.z_star == doctest::Approx(1.5));
  CHECK(tri.eps_star == doctest::Approx(2.0 / 3.0));
  for (PointIndex j = 0; j < 3; ++j) {
    CHECK(tri.y_star[j] == doctest::Approx(0.5));
    CHECK(tri.mu_star[j] == doctest::Approx(1.0 / 3.0));
  }
  check_invariants(triangle(), tri);

  const auto sing = solve_lp(singletons());
  CHECK(sing.z_star == doctest::Approx(2.0));
  CHECK(sing.eps_star == doctest::Approx(0.5));
}

TEST_CASE("solve_lp: invariants and agreement with vertex enumeration") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t m = 3 + seed % 6;
    const std::size_t n = 2 + seed % 7;
    const auto s = random_system(m, n, 0.35, seed);
    const auto lp = solve_lp(s);
    INFO("seed=", seed);
    check_invariants(s, lp);
    CHECK(std::abs(lp.z_star - oracle::lp_vertex_enumeration(s)) <= 1e-6);
  }
}

TEST_CASE("solve_lp: invariants on larger systems and bracketed by greedy") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto s = random_system(60, 80, 0.08, seed);
    const auto lp = solve_lp(s);
    check_invariants(s, lp);
    CHECK(lp.z_star <= static_cast<double>(greedy_hitting_set(s).size()) + 1e-9);
  }
}

TEST_CASE("solve_lp: duplicate ranges leave the optimum unchanged") {
  const auto base = solve_lp(triangle());
  const auto dup = solve_lp(SetSystem(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}, {0, 1}}));
  CHECK(dup.z_star == doctest::Approx(base.z_star));
}

TEST_CASE("solve_lp: errors") {
  CHECK_THROWS_AS(solve_lp(SetSystem(2, {{0}, {}})), InfeasibleError);
  CHECK_THROWS_AS(solve_lp(SetSystem(2, {})), std::invalid_argument);
}

TEST_CASE("maximize_bland: long double agrees with double") {
  const auto s = random_system(7, 9, 0.4, 3);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(7, 9);
  for (RangeIndex i = 0; i < 9; ++i) {
    for (PointIndex j : s.range(i)) a(j, i) = 1.0;
  }
  const Eigen::VectorXd ones_rows = Eigen::VectorXd::Ones(7);
  const Eigen::VectorXd ones_cols = Eigen::VectorXd::Ones(9);
  const auto rd = maximize_bland<double>(a, ones_rows, ones_cols, 1e-12, 10000);
  const auto rl = maximize_bland<long double>(a, ones_rows, ones_cols, 1e-15L, 10000);
  REQUIRE(rd.status == SimplexStatus::kOptimal);
  REQUIRE(rl.status == SimplexStatus::kOptimal);
  CHECK(static_cast<double>(rl.objective) == doctest::Approx(rd.objective).epsilon(1e-12));
  CHECK(rd.objective == doctest::Approx(solve_lp(s).z_star).epsilon(1e-9));
  // Complementary dual has the same objective.
  CHECK(rd.dual.sum() == doctest::Approx(rd.objective).epsilon(1e-9));
}

TEST_CASE("maximize_bland: unbounded and malformed input") {
  Eigen::MatrixXd a(1, 2);
  a << 1.0, -1.0;
  const Eigen::VectorXd b = Eigen::VectorXd::Ones(1);
  const Eigen::VectorXd c = Eigen::VectorXd::Ones(2);
  CHECK(maximize_bland<double>(a, b, c, 1e-12, 100).status == SimplexStatus::kUnbounded);
  const Eigen::VectorXd neg = -b;
  CHECK_THROWS_AS(maximize_bland<double>(a, neg, c, 1e-12, 100), std::invalid_argument);
}

}  // namespace
}  // namespace hitset
