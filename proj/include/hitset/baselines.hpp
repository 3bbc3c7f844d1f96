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

#ifndef HITSET_BASELINES_HPP_
#define HITSET_BASELINES_HPP_

#include <cstddef>
#include <optional>

#include "hitset/core.hpp"

namespace hitset {

// Classic greedy: repeatedly take the point in the most unhit ranges,
// lowest index on ties. Throws InfeasibleError on an empty range.
PointSet greedy_hitting_set(const SetSystem& system);

// Minimum-cardinality hitting set by branch and bound, or nullopt when every
// hitting set has more than `size_cap` points. Branches on the unhit range
// with the fewest candidate points; prunes with the greedy upper bound, the
// LP bound at the root and a disjoint-ranges bound at each node.
// Throws InfeasibleError on an empty range.
std::optional<PointSet> exact_hitting_set(const SetSystem& system,
                                          std::size_t size_cap);

}  // namespace hitset

#endif  // HITSET_BASELINES_HPP_
