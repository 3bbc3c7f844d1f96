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

#ifndef HITSET_LP_HPP_
#define HITSET_LP_HPP_

#include <cstddef>

#include <Eigen/Core>

#include "hitset/core.hpp"

namespace hitset {

// Optimum of the fractional hitting set LP
//
//   z* = min 1'y  s.t.  A y >= 1,  y >= 0,
//
// together with the equivalent max-epsilon form: eps* = 1 / z* and
// mu* = y* / z*, under which every range has mu*-weight >= eps*.
struct LpSolution {
  double z_star;
  Eigen::VectorXd y_star;
  double eps_star;
  WeightVector mu_star;
  std::size_t iterations;
};

// Feasibility slack allowed on A y* >= 1 before the solve is rejected.
inline constexpr double kLpFeasibilityTolerance = 1e-7;

// Throws InfeasibleError if a range is empty, std::invalid_argument if the
// system has no ranges, and NumericalError if the simplex fails to certify
// an optimum within `tol`.
LpSolution solve_lp(const SetSystem& system, double tol = 1e-9);

}  // namespace hitset

#endif  // HITSET_LP_HPP_
