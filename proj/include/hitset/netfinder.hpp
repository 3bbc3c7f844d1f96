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

#ifndef HITSET_NETFINDER_HPP_
#define HITSET_NETFINDER_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hitset/core.hpp"
#include "hitset/geom.hpp"
#include "hitset/lp.hpp"
#include "hitset/rng.hpp"

namespace hitset {

struct AlgoConfig {
  double beta = 0.75;
  double gamma = 0.01;
  // Upper bound on the VC dimension of the range family.
  std::size_t d = 1;
  SccFamily phi{0.0, 0.0, 1.0};
  std::uint64_t seed = 0;
  // Multiplies both sampling rates; 1 runs the algorithm as stated.
  double prob_scale = 1.0;
  // 0 selects default_max_oracle_calls(z*).
  std::size_t max_oracle_calls = 0;

  // Throws std::invalid_argument unless beta, gamma > 0, gamma <= 1/4,
  // beta + gamma <= 1, d >= 1 and prob_scale > 0.
  void validate() const;
};

// 24 * 48 / (beta (3/2 - beta - gamma)): the constant in the bound
// E[T] <= constant / eps* on oracle calls (about 2076 at the defaults).
double oracle_call_constant(double beta, double gamma);

// 10 * ceil(oracle_call_constant * z*).
std::size_t default_max_oracle_calls(const AlgoConfig& cfg, double z_star);

struct RunReport {
  PointSet hitting_set;
  std::size_t oracle_calls = 0;
  std::size_t initial_sample_size = 0;
  std::vector<std::size_t> added_per_call;
  std::uint64_t rng_seed = 0;
  std::chrono::nanoseconds wall_time{0};
};

// Factor f such that point j enters the initial sample with probability
// min{1, f * mu*_j}:
//
//   f = prob_scale * 2 / (q eps*) * max{ log(d^2 phi(8d/(beta eps*), 48d/beta)^2),
//                                        d log(1 / (q eps*)) },
//   q = 3/4 - beta/2,
//
// with each log argument floored at e. Throws std::invalid_argument if phi
// evaluates below 1.
double initial_sample_factor(const LpSolution& lp, const AlgoConfig& cfg);

PointSet initial_sample(const SetSystem& system, const LpSolution& lp,
                        const AlgoConfig& cfg, Rng& rng);
// Uses the initial-sample stream of cfg.seed (the one find_hitting_set uses).
PointSet initial_sample(const SetSystem& system, const LpSolution& lp,
                        const AlgoConfig& cfg);

// Factor f such that member j of an unhit range R is added with probability
// min{1, f * mu*_j}: f = prob_scale * 2 / (gamma mu*(R)) * max{log 2, d log(1/gamma)}.
// Throws ZeroWeightRangeError if mu*(R) = 0.
double resample_factor(const SetSystem& system, const LpSolution& lp,
                       const AlgoConfig& cfg, RangeIndex range_index);

PointSet resample_set(const SetSystem& system, const LpSolution& lp,
                      const AlgoConfig& cfg, RangeIndex range_index, Rng& rng);

// Reports the lowest-index range disjoint from the current set H. Keeps a
// per-range count of members of H, so insertions cost the degree of the
// point and the scan cursor only moves forward (H never shrinks).
class UnhitOracle {
 public:
  explicit UnhitOracle(const SetSystem& system);

  // Returns false if the point was already present.
  bool insert(PointIndex point);
  void insert(std::span<const PointIndex> points);
  bool contains(PointIndex point) const { return in_set_[point] != 0; }

  std::optional<RangeIndex> next_unhit();

  PointSet members() const;

 private:
  const SetSystem* system_;
  std::vector<char> in_set_;
  std::vector<std::uint32_t> hit_count_;
  RangeIndex cursor_ = 0;
};

// Runs the LP-guided net finder. Throws InfeasibleError (empty range),
// ZeroWeightRangeError and CapExceededError (max_oracle_calls).
RunReport find_hitting_set(const SetSystem& system, const AlgoConfig& cfg);
// Same, reusing a solved LP.
RunReport find_hitting_set(const SetSystem& system, const LpSolution& lp,
                           const AlgoConfig& cfg);

bool is_hitting_set(const SetSystem& system, std::span<const PointIndex> points);

// Independent sampling with probability
// min{1, (2 mu(x) / eps) max{log(1/gamma), d log(1/eps)}}; a weighted
// eps-net with probability at least 1 - gamma when d bounds the VC
// dimension. Requires 0 < eps <= 1 and 0 < gamma < 1.
PointSet sample_epsilon_net(const SetSystem& system, const WeightVector& w,
                            double eps, double gamma, std::size_t d,
                            std::uint64_t seed);

// True iff every range with mu(R) >= eps hits H.
bool is_epsilon_net(const SetSystem& system, const WeightVector& w, double eps,
                    std::span<const PointIndex> points);

}  // namespace hitset

#endif  // HITSET_NETFINDER_HPP_
