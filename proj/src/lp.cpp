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

#include "hitset/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hitset/error.hpp"
#include "hitset/simplex.hpp"

namespace hitset {

// The covering LP is solved through its dual packing LP
//
//   max 1'x  s.t.  A' x <= 1,  x >= 0   (one x_i per range),
//
// whose slack basis is feasible. The simplex multipliers of the point rows
// are an optimal covering solution y*, and strong duality gives z* = 1'x*.
LpSolution solve_lp(const SetSystem& system, double tol) {
  const auto n = static_cast<Eigen::Index>(system.num_ranges());
  const auto m = static_cast<Eigen::Index>(system.num_points());
  if (n == 0) {
    throw std::invalid_argument("LP needs at least one range");
  }
  for (std::size_t i = 0; i < system.num_ranges(); ++i) {
    if (system.ranges()[i].empty()) {
      throw InfeasibleError("range " + std::to_string(i) +
                            " is empty; no hitting set exists");
    }
  }

  Eigen::MatrixXd packing = Eigen::MatrixXd::Zero(m, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (PointIndex j : system.ranges()[static_cast<std::size_t>(i)]) {
      packing(j, i) = 1.0;
    }
  }
  const std::size_t max_iterations =
      std::max<std::size_t>(10000, 50 * static_cast<std::size_t>(m + n));
  const auto result = maximize_bland<double>(
      packing, Eigen::VectorXd::Ones(m), Eigen::VectorXd::Ones(n), tol,
      max_iterations);
  if (result.status != SimplexStatus::kOptimal) {
    throw NumericalError(
        result.status == SimplexStatus::kUnbounded
            ? "simplex reported an unbounded packing LP"
            : "simplex hit the iteration limit (" +
                  std::to_string(result.iterations) + ")");
  }

  Eigen::VectorXd y = result.dual;
  if ((y.array() < -kLpFeasibilityTolerance).any()) {
    throw NumericalError("simplex returned a negative dual value");
  }
  y = y.cwiseMax(0.0).cwiseMin(1.0);

  Eigen::VectorXd coverage = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (PointIndex j : system.ranges()[static_cast<std::size_t>(i)]) {
      coverage[i] += y[j];
    }
  }
  const double min_cover = coverage.minCoeff();
  if (min_cover < 1.0 - kLpFeasibilityTolerance) {
    throw NumericalError("covering solution violates a constraint by " +
                         std::to_string(1.0 - min_cover));
  }
  // Rescale away the last rounding slack so A y >= 1 holds exactly.
  if (min_cover < 1.0) y /= min_cover;

  const double z = y.sum();
  if (std::abs(z - result.objective) > kLpFeasibilityTolerance * std::max(1.0, z)) {
    throw NumericalError("duality gap " +
                         std::to_string(std::abs(z - result.objective)) +
                         " exceeds tolerance");
  }
  WeightVector mu(y / z);
  return LpSolution{z, std::move(y), 1.0 / z, std::move(mu), result.iterations};
}

}  // namespace hitset
