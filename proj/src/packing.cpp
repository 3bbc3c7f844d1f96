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

#include "hitset/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hitset {

PackingCheck is_packing(const SetSystem& system, const WeightVector& w,
                        std::span<const RangeIndex> members, double k,
                        double delta) {
  for (RangeIndex r : members) {
    const double weight = weight_of(system, w, r);
    if (weight > k + kPackingTolerance) {
      return {false, PackingViolation{PackingViolation::Kind::kTooHeavy, r, r, weight}};
    }
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const double diff = sym_diff_weight(system, w, members[a], members[b]);
      if (diff < delta - kPackingTolerance) {
        return {false, PackingViolation{PackingViolation::Kind::kTooClose,
                                        members[a], members[b], diff}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

bool fits(const SetSystem& system, const WeightVector& w,
          std::span<const RangeIndex> members, RangeIndex candidate, double k,
          double delta) {
  if (weight_of(system, w, candidate) > k + kPackingTolerance) return false;
  return std::all_of(members.begin(), members.end(), [&](RangeIndex r) {
    return sym_diff_weight(system, w, r, candidate) >= delta - kPackingTolerance;
  });
}

}  // namespace

Packing greedy_maximal_packing(const SetSystem& system, const WeightVector& w,
                               double k, double delta, std::uint64_t order_seed) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("packing separation delta must be positive");
  }
  std::vector<RangeIndex> order(system.num_ranges());
  std::iota(order.begin(), order.end(), RangeIndex{0});
  Rng rng(order_seed);
  rng.shuffle(std::span<RangeIndex>(order));

  Packing packing{{}, k, delta};
  for (RangeIndex r : order) {
    if (fits(system, w, packing.members, r, k, delta)) packing.members.push_back(r);
  }
  return packing;
}

bool is_maximal(const SetSystem& system, const WeightVector& w,
                const Packing& packing) {
  std::vector<char> member(system.num_ranges(), 0);
  for (RangeIndex r : packing.members) member[r] = 1;
  for (RangeIndex r = 0; r < system.num_ranges(); ++r) {
    if (!member[r] &&
        fits(system, w, packing.members, r, packing.k, packing.delta)) {
      return false;
    }
  }
  return true;
}

double shallow_packing_bound(std::size_t d, double delta, double k,
                             const SccFamily& phi) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1]");
  }
  if (!(k > 0.0)) throw std::invalid_argument("k must be positive");
  const double dd = static_cast<double>(d);
  return 24.0 * dd / delta * phi(8.0 * dd / delta, 48.0 * dd * k / delta);
}

UnitDistanceGraph build_unit_distance_graph(const Projection& projection) {
  UnitDistanceGraph graph;
  graph.vertices = projection.traces;
  graph.vertex_weights = projection.multiplicities();
  const std::size_t v = graph.vertices.size();
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      const auto& sa = graph.vertices[a];
      const auto& sb = graph.vertices[b];
      const std::size_t gap = sa.size() > sb.size() ? sa.size() - sb.size()
                                                    : sb.size() - sa.size();
      if (gap != 1) continue;
      if (sym_diff_size(sa, sb, 1) != 1) continue;
      const std::size_t weight =
          std::min(graph.vertex_weights[a], graph.vertex_weights[b]);
      graph.edges.emplace_back(a, b);
      graph.edge_weights.push_back(weight);
      graph.total_weight += weight;
    }
  }
  return graph;
}

bool check_edge_bound(const UnitDistanceGraph& graph, std::size_t d) {
  return graph.num_edges() <= d * graph.num_vertices();
}

bool check_total_weight_bound(const UnitDistanceGraph& graph, std::size_t d,
                              std::size_t packing_size) {
  return graph.total_weight <= 2 * d * packing_size;
}

std::size_t packing_sample_size(std::size_t d, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const double s = std::ceil(8.0 * static_cast<double>(d) / delta) - 1.0;
  if (s < 1.0) {
    throw std::invalid_argument("sample size ceil(8d/delta) - 1 is below 1");
  }
  return static_cast<std::size_t>(s);
}

WeightedSampler::WeightedSampler(const WeightVector& w) : cumulative_(w.size()) {
  const auto& v = w.values();
  std::partial_sum(v.data(), v.data() + v.size(), cumulative_.begin());
}

PointIndex WeightedSampler::draw(Rng& rng) const {
  const double u = rng.uniform() * cumulative_.back();
  // First point whose cumulative weight exceeds u; zero-weight points have
  // empty bins and are never returned.
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return static_cast<PointIndex>(it - cumulative_.begin());
}

PointSet WeightedSampler::distinct_sample(std::size_t draws, Rng& rng) const {
  PointSet out;
  out.reserve(draws);
  for (std::size_t t = 0; t < draws; ++t) out.push_back(draw(rng));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PackingLemmaEstimate monte_carlo_packing_lemma(const SetSystem& system,
                                               const WeightVector& w,
                                               std::span<const RangeIndex> members,
                                               std::size_t d, double delta,
                                               std::size_t trials,
                                               std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (trials < 2) throw std::invalid_argument("need at least two trials");
  const PackingCheck separated =
      is_packing(system, w, members, std::numeric_limits<double>::infinity(), delta);
  if (!separated) {
    throw std::invalid_argument(
        "members are not delta-separated: ranges " +
        std::to_string(separated.violation->first) + " and " +
        std::to_string(separated.violation->second) + " differ by weight " +
        std::to_string(separated.violation->value));
  }

  PackingLemmaEstimate out;
  out.packing_size = members.size();
  out.sample_size = packing_sample_size(d, delta);
  out.trials = trials;

  const SetSystem packed = system.subsystem(members);
  const WeightedSampler sampler(w);
  const Rng root(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = root.split(t);
    const PointSet y = sampler.distinct_sample(out.sample_size, rng);
    const auto traces = static_cast<double>(count_traces(packed, y));
    sum += traces;
    sum_sq += traces * traces;
  }
  const double n = static_cast<double>(trials);
  out.mean_projection = sum / n;
  const double variance =
      std::max(0.0, (sum_sq - n * out.mean_projection * out.mean_projection) / (n - 1.0));
  out.std_error = std::sqrt(variance / n);
  return out;
}

}  // namespace hitset
