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

#ifndef HITSET_TESTS_FIXTURES_HPP_
#define HITSET_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <vector>

#include "hitset/core.hpp"
#include "hitset/rng.hpp"

namespace hitset::testing {

// Points a = 0, b = 1, c = 2.
inline SetSystem triangle() { return SetSystem(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline SetSystem singletons() { return SetSystem(2, {{0}, {1}}); }

// All contiguous index intervals [i, j] on m collinear points.
inline SetSystem contiguous_intervals(std::size_t m) {
  std::vector<PointSet> ranges;
  for (PointIndex i = 0; i < m; ++i) {
    for (PointIndex j = i; j < m; ++j) {
      PointSet r;
      for (PointIndex p = i; p <= j; ++p) r.push_back(p);
      ranges.push_back(r);
    }
  }
  return SetSystem(m, ranges);
}

inline SetSystem power_set(std::size_t m) {
  std::vector<PointSet> ranges;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    PointSet r;
    for (PointIndex j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) r.push_back(j);
    }
    ranges.push_back(r);
  }
  return SetSystem(m, ranges);
}

// Random system; with `nonempty`, each range gets at least one point.
inline SetSystem random_system(std::size_t m, std::size_t n, double density,
                               std::uint64_t seed, bool nonempty = true) {
  Rng rng(seed);
  std::vector<PointSet> ranges(n);
  for (auto& r : ranges) {
    for (PointIndex j = 0; j < m; ++j) {
      if (rng.bernoulli(density)) r.push_back(j);
    }
    if (nonempty && r.empty()) r.push_back(static_cast<PointIndex>(rng.below(m)));
  }
  return SetSystem(m, ranges);
}

}  // namespace hitset::testing

#endif  // HITSET_TESTS_FIXTURES_HPP_
