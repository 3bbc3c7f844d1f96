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

#include "hitset/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "hitset/rng.hpp"

namespace hitset {

SetSystem::SetSystem(std::size_t num_points, std::vector<PointSet> ranges)
    : num_points_(num_points), ranges_(std::move(ranges)) {
  if (num_points_ > std::numeric_limits<PointIndex>::max() ||
      ranges_.size() > std::numeric_limits<RangeIndex>::max()) {
    throw std::invalid_argument("set system too large for 32-bit indices");
  }
  for (std::size_t i = 0; i < ranges_.size(); ++i) {
    const PointSet& r = ranges_[i];
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (r[t] >= num_points_) {
        throw std::invalid_argument("range " + std::to_string(i) +
                                    " has point index " + std::to_string(r[t]) +
                                    " outside [0, " + std::to_string(num_points_) +
                                    ")");
      }
      if (t > 0 && r[t - 1] >= r[t]) {
        throw std::invalid_argument("range " + std::to_string(i) +
                                    " is not strictly increasing");
      }
    }
    nnz_ += r.size();
  }
  build_columns();
}

SetSystem SetSystem::from_unsorted(std::size_t num_points,
                                   std::vector<PointSet> ranges) {
  for (PointSet& r : ranges) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  return SetSystem(num_points, std::move(ranges));
}

void SetSystem::build_columns() {
  columns_.assign(num_points_, {});
  for (std::size_t i = 0; i < ranges_.size(); ++i) {
    for (PointIndex j : ranges_[i]) {
      columns_[j].push_back(static_cast<RangeIndex>(i));
    }
  }
}

std::span<const PointIndex> SetSystem::range(RangeIndex i) const {
  if (i >= ranges_.size()) {
    throw std::out_of_range("range index " + std::to_string(i) +
                            " out of bounds (n = " +
                            std::to_string(ranges_.size()) + ")");
  }
  return ranges_[i];
}

SetSystem SetSystem::subsystem(std::span<const RangeIndex> members) const {
  std::vector<PointSet> picked;
  picked.reserve(members.size());
  for (RangeIndex i : members) {
    const auto r = range(i);
    picked.emplace_back(r.begin(), r.end());
  }
  return SetSystem(num_points_, std::move(picked));
}

bool SetSystem::has_empty_range() const {
  return std::any_of(ranges_.begin(), ranges_.end(),
                     [](const PointSet& r) { return r.empty(); });
}

WeightVector::WeightVector(Eigen::VectorXd raw) : values_(std::move(raw)) {
  if (values_.size() == 0) {
    throw std::invalid_argument("weight vector is empty");
  }
  if (!values_.allFinite() || (values_.array() < 0.0).any()) {
    throw std::invalid_argument("weights must be finite and nonnegative");
  }
  const double total = values_.sum();
  if (!(total > 0.0)) {
    throw std::invalid_argument("weights must have a positive sum");
  }
  values_ /= total;
}

WeightVector WeightVector::uniform(std::size_t num_points) {
  return WeightVector(
      Eigen::VectorXd::Ones(static_cast<Eigen::Index>(num_points)));
}

double WeightVector::of(std::span<const PointIndex> points) const {
  double sum = 0.0;
  for (PointIndex j : points) sum += values_[j];
  return sum;
}

namespace {

void check_compatible(const SetSystem& system, const WeightVector& w) {
  if (w.size() != system.num_points()) {
    throw std::invalid_argument("weight vector has " + std::to_string(w.size()) +
                                " entries for " +
                                std::to_string(system.num_points()) + " points");
  }
}

}  // namespace

double weight_of(const SetSystem& system, const WeightVector& w,
                 RangeIndex range_index) {
  check_compatible(system, w);
  return w.of(system.range(range_index));
}

double sym_diff_weight(const SetSystem& system, const WeightVector& w,
                       RangeIndex i, RangeIndex j) {
  check_compatible(system, w);
  const auto a = system.range(i);
  const auto b = system.range(j);
  double sum = 0.0;
  std::size_t p = 0, q = 0;
  while (p < a.size() && q < b.size()) {
    if (a[p] < b[q]) {
      sum += w[a[p++]];
    } else if (b[q] < a[p]) {
      sum += w[b[q++]];
    } else {
      ++p;
      ++q;
    }
  }
  for (; p < a.size(); ++p) sum += w[a[p]];
  for (; q < b.size(); ++q) sum += w[b[q]];
  return sum;
}

double intersection_weight(const SetSystem& system, const WeightVector& w,
                           RangeIndex i, RangeIndex j) {
  check_compatible(system, w);
  return w.of(intersect(system.range(i), system.range(j)));
}

bool intersects(std::span<const PointIndex> a, std::span<const PointIndex> b) {
  std::size_t p = 0, q = 0;
  while (p < a.size() && q < b.size()) {
    if (a[p] < b[q]) {
      ++p;
    } else if (b[q] < a[p]) {
      ++q;
    } else {
      return true;
    }
  }
  return false;
}

std::size_t sym_diff_size(std::span<const PointIndex> a,
                          std::span<const PointIndex> b,
                          std::size_t stop_above) {
  std::size_t count = 0;
  std::size_t p = 0, q = 0;
  while (p < a.size() && q < b.size()) {
    if (a[p] < b[q]) {
      ++count;
      ++p;
    } else if (b[q] < a[p]) {
      ++count;
      ++q;
    } else {
      ++p;
      ++q;
    }
    if (count > stop_above) return count;
  }
  return count + (a.size() - p) + (b.size() - q);
}

PointSet intersect(std::span<const PointIndex> a, std::span<const PointIndex> b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<std::size_t> Projection::multiplicities() const {
  std::vector<std::size_t> out;
  out.reserve(sources.size());
  for (const auto& s : sources) out.push_back(s.size());
  return out;
}

SetSystem Projection::as_system(std::size_t num_points) const {
  return SetSystem(num_points, traces);
}

namespace {

void check_sample(const SetSystem& system, std::span<const PointIndex> sample) {
  for (std::size_t t = 0; t < sample.size(); ++t) {
    if (sample[t] >= system.num_points()) {
      throw std::out_of_range("sample point " + std::to_string(sample[t]) +
                              " out of bounds");
    }
    if (t > 0 && sample[t - 1] >= sample[t]) {
      throw std::invalid_argument("sample must be strictly increasing");
    }
  }
}

}  // namespace

Projection project(const SetSystem& system, std::span<const PointIndex> sample) {
  check_sample(system, sample);
  Projection out;
  out.sample.assign(sample.begin(), sample.end());
  std::map<PointSet, std::size_t> index;
  for (std::size_t i = 0; i < system.num_ranges(); ++i) {
    PointSet trace = intersect(system.ranges()[i], sample);
    auto [it, inserted] = index.try_emplace(std::move(trace), out.traces.size());
    if (inserted) {
      out.traces.push_back(it->first);
      out.sources.emplace_back();
    }
    out.sources[it->second].push_back(static_cast<RangeIndex>(i));
  }
  return out;
}

std::size_t count_traces(const SetSystem& system,
                         std::span<const PointIndex> sample) {
  check_sample(system, sample);
  std::set<PointSet> seen;
  for (const PointSet& r : system.ranges()) seen.insert(intersect(r, sample));
  return seen.size();
}

namespace {

// Distinct trace count on at most 63 points, via per-range bit masks.
std::size_t count_mask_traces(const SetSystem& system,
                              std::span<const PointIndex> points,
                              std::vector<std::uint64_t>& masks) {
  masks.assign(system.num_ranges(), 0);
  for (std::size_t b = 0; b < points.size(); ++b) {
    for (RangeIndex r : system.ranges_containing(points[b])) {
      masks[r] |= std::uint64_t{1} << b;
    }
  }
  std::sort(masks.begin(), masks.end());
  return static_cast<std::size_t>(
      std::unique(masks.begin(), masks.end()) - masks.begin());
}

}  // namespace

bool is_shattered(const SetSystem& system, std::span<const PointIndex> points) {
  if (points.size() >= 63) return false;
  const std::uint64_t needed = std::uint64_t{1} << points.size();
  if (system.num_ranges() < needed) return false;
  std::vector<std::uint64_t> masks;
  return count_mask_traces(system, points, masks) == needed;
}

VcDimension vc_dimension_exact(const SetSystem& system,
                               std::optional<std::size_t> cap) {
  const std::size_t m = system.num_points();
  if (!cap && m > kVcExhaustiveLimit) {
    throw std::invalid_argument(
        "exhaustive VC dimension needs m <= " +
        std::to_string(kVcExhaustiveLimit) + " or an explicit cap (m = " +
        std::to_string(m) + ")");
  }
  if (system.num_ranges() == 0) return {0, true};

  // Every subset of a shattered set is shattered, so each shattered set of
  // size s+1 extends a shattered set of size s by a larger point index.
  std::vector<PointSet> level{PointSet{}};
  std::size_t dim = 0;
  std::vector<std::uint64_t> masks;
  while (!level.empty()) {
    const std::size_t next_size = dim + 1;
    if (next_size >= 63) break;
    if (system.num_ranges() < (std::uint64_t{1} << next_size)) break;
    std::vector<PointSet> next;
    PointSet candidate;
    for (const PointSet& base : level) {
      const PointIndex start = base.empty() ? 0 : base.back() + 1;
      for (PointIndex p = start; p < m; ++p) {
        candidate = base;
        candidate.push_back(p);
        if (count_mask_traces(system, candidate, masks) ==
            (std::uint64_t{1} << next_size)) {
          next.push_back(candidate);
        }
      }
    }
    if (next.empty()) break;
    dim = next_size;
    if (cap && dim > *cap) return {dim, false};
    level = std::move(next);
  }
  return {dim, true};
}

std::uint64_t sauer_bound(std::size_t s, std::size_t d) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(s, i)
  for (std::size_t i = 0; i <= std::min(s, d); ++i) {
    if (i > 0) {
      // C(s, i) = C(s, i-1) * (s - i + 1) / i, computed without overflow
      // where possible.
      const std::uint64_t num = s - i + 1;
      const std::uint64_t g = std::gcd(binom, static_cast<std::uint64_t>(i));
      const std::uint64_t reduced = binom / g;
      const std::uint64_t denom = i / g;
      if (reduced > kMax / num) return kMax;
      binom = reduced * num / denom;
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

namespace {

std::size_t exhaustive_shallow_cells(const SetSystem& system, std::size_t l,
                                     std::size_t k) {
  const std::size_t m = system.num_points();
  std::vector<std::uint32_t> rows(system.num_ranges(), 0);
  for (std::size_t i = 0; i < system.num_ranges(); ++i) {
    for (PointIndex j : system.ranges()[i]) rows[i] |= std::uint32_t{1} << j;
  }
  std::vector<char> seen(std::size_t{1} << m, 0);
  std::vector<std::uint32_t> touched;
  std::size_t best = 0;
  for (std::uint32_t cols = 0; cols < (std::uint32_t{1} << m); ++cols) {
    if (static_cast<std::size_t>(std::popcount(cols)) > l) continue;
    std::size_t cells = 0;
    touched.clear();
    for (std::uint32_t row : rows) {
      const std::uint32_t r = row & cols;
      if (static_cast<std::size_t>(std::popcount(r)) > k || seen[r]) continue;
      seen[r] = 1;
      touched.push_back(r);
      ++cells;
    }
    for (std::uint32_t r : touched) seen[r] = 0;
    best = std::max(best, cells);
  }
  return best;
}

// Cells of depth <= k over every prefix (length <= l) of one column order.
std::size_t prefix_shallow_cells(const SetSystem& system,
                                 std::span<const PointIndex> order,
                                 std::size_t l, std::size_t k) {
  std::vector<std::uint32_t> position(system.num_points(),
                                      std::numeric_limits<std::uint32_t>::max());
  for (std::size_t t = 0; t < order.size(); ++t) {
    position[order[t]] = static_cast<std::uint32_t>(t);
  }
  // Each row as the sorted positions of its points inside the first l
  // columns; its restriction to a prefix of length t is a prefix of this.
  std::vector<std::vector<std::uint32_t>> rows(system.num_ranges());
  for (std::size_t i = 0; i < system.num_ranges(); ++i) {
    for (PointIndex j : system.ranges()[i]) {
      if (position[j] < l) rows[i].push_back(position[j]);
    }
    std::sort(rows[i].begin(), rows[i].end());
  }
  std::size_t best = 0;
  std::set<std::vector<std::uint32_t>> cells;
  for (std::size_t t = 0; t <= l; ++t) {
    cells.clear();
    for (const auto& row : rows) {
      const auto depth = static_cast<std::size_t>(
          std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(t)) -
          row.begin());
      if (depth > k) continue;
      cells.emplace(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(depth));
    }
    best = std::max(best, cells.size());
  }
  return best;
}

}  // namespace

std::size_t count_shallow_cells(const SetSystem& system,
                                const WeightVector* weights, std::size_t l,
                                std::size_t k, std::size_t trials,
                                std::uint64_t seed) {
  const std::size_t m = system.num_points();
  if (l > m) {
    throw std::invalid_argument("column count l = " + std::to_string(l) +
                                " exceeds m = " + std::to_string(m));
  }
  if (weights && weights->size() != m) {
    throw std::invalid_argument("weight vector size does not match m");
  }
  if (system.num_ranges() == 0) return 0;
  if (m <= kCellsExhaustiveLimit) return exhaustive_shallow_cells(system, l, k);

  std::vector<PointIndex> order(m);
  std::iota(order.begin(), order.end(), PointIndex{0});
  std::size_t best = prefix_shallow_cells(system, order, l, k);

  Rng rng(seed);
  std::vector<std::pair<double, PointIndex>> keyed(m);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng stream = rng.split(trial);
    if (weights) {
      // Weighted order without replacement: sort by log(u) / w descending.
      for (PointIndex j = 0; j < m; ++j) {
        const double w = (*weights)[j];
        const double u = 1.0 - stream.uniform();  // in (0, 1]
        keyed[j] = {w > 0.0 ? std::log(u) / w
                            : -std::numeric_limits<double>::infinity(),
                    j};
      }
      std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return a.first > b.first;
      });
      for (std::size_t t = 0; t < m; ++t) order[t] = keyed[t].second;
    } else {
      std::iota(order.begin(), order.end(), PointIndex{0});
      stream.shuffle(std::span<PointIndex>(order));
    }
    best = std::max(best, prefix_shallow_cells(system, order, l, k));
  }
  return best;
}

}  // namespace hitset
