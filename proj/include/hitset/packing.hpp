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

#ifndef HITSET_PACKING_HPP_
#define HITSET_PACKING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hitset/core.hpp"
#include "hitset/geom.hpp"
#include "hitset/rng.hpp"

namespace hitset {

// A weighted (k, delta)-packing: ranges with mu(R) <= k whose pairwise
// symmetric differences weigh at least delta.
struct Packing {
  std::vector<RangeIndex> members;
  double k = 0.0;
  double delta = 0.0;
};

struct PackingViolation {
  enum class Kind { kTooHeavy, kTooClose };
  Kind kind;
  RangeIndex first;
  // Equal to `first` for kTooHeavy.
  RangeIndex second;
  // The offending weight: mu(R) or mu(R symmetric-difference S).
  double value;
};

struct PackingCheck {
  bool ok = true;
  std::optional<PackingViolation> violation;

  explicit operator bool() const { return ok; }
};

// Weight comparisons use this slack in favour of membership.
inline constexpr double kPackingTolerance = 1e-12;

PackingCheck is_packing(const SetSystem& system, const WeightVector& w,
                        std::span<const RangeIndex> members, double k,
                        double delta);

// Scans ranges in a seeded random order and keeps each one that fits.
// Throws std::invalid_argument unless delta > 0.
Packing greedy_maximal_packing(const SetSystem& system, const WeightVector& w,
                               double k, double delta, std::uint64_t order_seed);

// True iff no range outside `packing` could be added.
bool is_maximal(const SetSystem& system, const WeightVector& w,
                const Packing& packing);

// (24 d / delta) * phi(8 d / delta, 48 d k / delta).
double shallow_packing_bound(std::size_t d, double delta, double k,
                             const SccFamily& phi);

// Graph on the distinct traces of a projection, joining traces that differ
// in exactly one point. Vertex weight = number of ranges with that trace;
// edge weight = min of its endpoint weights.
struct UnitDistanceGraph {
  std::vector<PointSet> vertices;
  std::vector<std::size_t> vertex_weights;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> edge_weights;
  std::size_t total_weight = 0;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_edges() const { return edges.size(); }
};

UnitDistanceGraph build_unit_distance_graph(const Projection& projection);

// |E| <= d |V|.
bool check_edge_bound(const UnitDistanceGraph& graph, std::size_t d);

// W <= 2 d |P|.
bool check_total_weight_bound(const UnitDistanceGraph& graph, std::size_t d,
                              std::size_t packing_size);

// s = ceil(8 d / delta) - 1.
std::size_t packing_sample_size(std::size_t d, double delta);

// iid draws from mu with replacement, returned as the sorted distinct
// points. Inverse CDF on the cumulative weights.
class WeightedSampler {
 public:
  explicit WeightedSampler(const WeightVector& w);
  PointIndex draw(Rng& rng) const;
  PointSet distinct_sample(std::size_t draws, Rng& rng) const;

 private:
  std::vector<double> cumulative_;
};

struct PackingLemmaEstimate {
  std::size_t packing_size = 0;
  std::size_t sample_size = 0;
  std::size_t trials = 0;
  double mean_projection = 0.0;
  double std_error = 0.0;

  // |P| <= 2 (mean + 3 stderr).
  bool holds() const {
    return static_cast<double>(packing_size) <=
           2.0 * (mean_projection + 3.0 * std_error);
  }
};

// Monte Carlo estimate of E|P|_Y| for Y the distinct points of s iid draws
// from mu. Requires pairwise symmetric-difference weight >= delta among the
// members (std::invalid_argument otherwise) and d >= 1.
PackingLemmaEstimate monte_carlo_packing_lemma(const SetSystem& system,
                                               const WeightVector& w,
                                               std::span<const RangeIndex> members,
                                               std::size_t d, double delta,
                                               std::size_t trials,
                                               std::uint64_t seed);

}  // namespace hitset

#endif  // HITSET_PACKING_HPP_
