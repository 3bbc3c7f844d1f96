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

#ifndef HITSET_SIMPLEX_HPP_
#define HITSET_SIMPLEX_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include <Eigen/Core>

namespace hitset {

enum class SimplexStatus { kOptimal, kUnbounded, kIterationLimit };

template <typename Scalar>
struct SimplexResult {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  SimplexStatus status = SimplexStatus::kIterationLimit;
  Scalar objective = Scalar(0);
  Vector primal;  // x
  Vector dual;    // one multiplier per row of A
  std::size_t iterations = 0;
};

// Dense tableau simplex for
//
//   max c'x  s.t.  A x <= b,  x >= 0,   with b >= 0,
//
// so the slack basis is a feasible start and no phase one is needed.
// Entering and leaving variables follow Bland's rule (lowest index among
// candidates), which rules out cycling on degenerate vertices. At an optimum
// the objective row over the slack columns holds the dual solution.
template <typename Scalar, typename DerivedA, typename DerivedB, typename DerivedC>
SimplexResult<Scalar> maximize_bland(const Eigen::MatrixBase<DerivedA>& A,
                                     const Eigen::MatrixBase<DerivedB>& b,
                                     const Eigen::MatrixBase<DerivedC>& c,
                                     Scalar tol, std::size_t max_iterations) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  const Eigen::Index rows = A.rows();
  const Eigen::Index vars = A.cols();
  if (b.size() != rows || c.size() != vars) {
    throw std::invalid_argument("simplex: dimension mismatch");
  }
  if ((b.array() < Scalar(0)).any()) {
    throw std::invalid_argument("simplex: right-hand side must be nonnegative");
  }

  const Eigen::Index rhs = vars + rows;
  Matrix tableau = Matrix::Zero(rows + 1, vars + rows + 1);
  tableau.topLeftCorner(rows, vars) = A.template cast<Scalar>();
  tableau.block(0, vars, rows, rows).setIdentity();
  tableau.col(rhs).head(rows) = b.template cast<Scalar>();
  tableau.row(rows).head(vars) = -c.template cast<Scalar>().transpose();

  Eigen::Matrix<Eigen::Index, Eigen::Dynamic, 1> basis(rows);
  for (Eigen::Index i = 0; i < rows; ++i) basis[i] = vars + i;

  SimplexResult<Scalar> result;
  Vector pivot_col(rows + 1);
  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> pivot_row(rhs + 1);
  for (;;) {
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < rhs; ++j) {
      if (tableau(rows, j) < -tol) {
        entering = j;
        break;
      }
    }
    if (entering < 0) {
      result.status = SimplexStatus::kOptimal;
      break;
    }
    if (result.iterations == max_iterations) {
      result.status = SimplexStatus::kIterationLimit;
      break;
    }

    Scalar min_ratio = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (tableau(i, entering) > tol) {
        min_ratio = std::min(min_ratio, tableau(i, rhs) / tableau(i, entering));
      }
    }
    Eigen::Index leaving = -1;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (tableau(i, entering) <= tol) continue;
      if (tableau(i, rhs) / tableau(i, entering) > min_ratio + tol) continue;
      if (leaving < 0 || basis[i] < basis[leaving]) leaving = i;
    }
    if (leaving < 0) {
      result.status = SimplexStatus::kUnbounded;
      break;
    }

    tableau.row(leaving) /= tableau(leaving, entering);
    pivot_col = tableau.col(entering);
    pivot_col[leaving] = Scalar(0);
    pivot_row = tableau.row(leaving);
    tableau.noalias() -= pivot_col * pivot_row;
    tableau(leaving, entering) = Scalar(1);
    basis[leaving] = entering;
    ++result.iterations;
  }

  result.objective = tableau(rows, rhs);
  result.primal = Vector::Zero(vars);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (basis[i] < vars) result.primal[basis[i]] = tableau(i, rhs);
  }
  result.dual = tableau.row(rows).segment(vars, rows).transpose();
  return result;
}

}  // namespace hitset

#endif  // HITSET_SIMPLEX_HPP_
