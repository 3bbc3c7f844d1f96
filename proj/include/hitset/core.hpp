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

#ifndef HITSET_CORE_HPP_
#define HITSET_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace hitset {

using PointIndex = std::uint32_t;
using RangeIndex = std::uint32_t;

// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<PointIndex>;

// A finite set system (X, R): m points and n ranges, each range a sorted
// list of point indices. Row i is the i-th row of the 0/1 incidence matrix.
// Immutable after construction.
class SetSystem {
 public:
  SetSystem() = default;

  // Throws std::invalid_argument unless every range is strictly increasing
  // and inside [0, num_points).
  SetSystem(std::size_t num_points, std::vector<PointSet> ranges);

  // Sorts and deduplicates each range before validating bounds.
  static SetSystem from_unsorted(std::size_t num_points,
                                 std::vector<PointSet> ranges);

  std::size_t num_points() const { return num_points_; }
  std::size_t num_ranges() const { return ranges_.size(); }
  std::size_t nnz() const { return nnz_; }

  std::span<const PointIndex> range(RangeIndex i) const;
  const std::vector<PointSet>& ranges() const { return ranges_; }

  // Ranges that contain point j (the j-th column of the incidence matrix).
  std::span<const RangeIndex> ranges_containing(PointIndex j) const {
    return columns_[j];
  }

  // The system restricted to the listed ranges, in the given order.
  SetSystem subsystem(std::span<const RangeIndex> members) const;

  bool has_empty_range() const;

 private:
  void build_columns();

  std::size_t num_points_ = 0;
  std::size_t nnz_ = 0;
  std::vector<PointSet> ranges_;
  std::vector<std::vector<RangeIndex>> columns_;
};

// Nonnegative point weights normalized to total mass 1.
class WeightVector {
 public:
  // Any nonnegative finite vector with positive sum; stored as w / sum(w).
  explicit WeightVector(Eigen::VectorXd raw);

  static WeightVector uniform(std::size_t num_points);

  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  double operator[](PointIndex j) const { return values_[j]; }
  const Eigen::VectorXd& values() const { return values_; }

  // mu(S) for a set of point indices.
  double of(std::span<const PointIndex> points) const;

 private:
  Eigen::VectorXd values_;
};

// mu(R_i).
double weight_of(const SetSystem& system, const WeightVector& w,
                 RangeIndex range_index);

// mu(R_i symmetric-difference R_j).
double sym_diff_weight(const SetSystem& system, const WeightVector& w,
                       RangeIndex i, RangeIndex j);

// mu(R_i intersect R_j).
double intersection_weight(const SetSystem& system, const WeightVector& w,
                           RangeIndex i, RangeIndex j);

bool intersects(std::span<const PointIndex> a, std::span<const PointIndex> b);

// |a symmetric-difference b| for sorted lists, stopping once it exceeds
// `stop_above`.
std::size_t sym_diff_size(std::span<const PointIndex> a,
                          std::span<const PointIndex> b,
                          std::size_t stop_above = SIZE_MAX);

PointSet intersect(std::span<const PointIndex> a, std::span<const PointIndex> b);

// The trace R|_Y = {R cap Y}. Traces are distinct and listed in order of the
// lowest range index producing them; sources[t] lists the ranges whose
// intersection with Y equals traces[t].
struct Projection {
  PointSet sample;
  std::vector<PointSet> traces;
  std::vector<std::vector<RangeIndex>> sources;

  std::size_t size() const { return traces.size(); }
  std::vector<std::size_t> multiplicities() const;
  // The traces as a set system over the original ground set.
  SetSystem as_system(std::size_t num_points) const;
};

Projection project(const SetSystem& system, std::span<const PointIndex> sample);

// Number of distinct traces |R|_Y| without materializing them.
std::size_t count_traces(const SetSystem& system,
                         std::span<const PointIndex> sample);

struct VcDimension {
  std::size_t value = 0;
  // False when the search stopped at the cap: the true value is >= value.
  bool exact = true;
};

// Size of the largest shattered point set, by exhaustive level-wise search.
// Without a cap, refuses systems with more than kVcExhaustiveLimit points.
// With a cap, searches sets up to size cap + 1 and reports {cap + 1, false}
// if one of that size is shattered.
inline constexpr std::size_t kVcExhaustiveLimit = 24;
VcDimension vc_dimension_exact(const SetSystem& system,
                               std::optional<std::size_t> cap = std::nullopt);

// True iff the traces on `points` include all 2^|points| subsets.
bool is_shattered(const SetSystem& system, std::span<const PointIndex> points);

// sum_{i <= d} C(s, i), saturating.
std::uint64_t sauer_bound(std::size_t s, std::size_t d);

// Largest number of cells (distinct rows) of depth <= k over submatrices of
// at most l columns. For m <= kCellsExhaustiveLimit every column subset is
// enumerated and the result is exact. Otherwise the maximum is taken over
// the prefixes of `trials` random column orders plus the identity order,
// which gives a lower bound. With weights, random orders draw columns in
// proportion to weight.
inline constexpr std::size_t kCellsExhaustiveLimit = 12;
std::size_t count_shallow_cells(const SetSystem& system,
                                const WeightVector* weights, std::size_t l,
                                std::size_t k, std::size_t trials,
                                std::uint64_t seed);

}  // namespace hitset

#endif  // HITSET_CORE_HPP_
