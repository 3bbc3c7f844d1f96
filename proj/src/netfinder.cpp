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

#include "hitset/netfinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hitset/error.hpp"

namespace hitset {

namespace {

constexpr std::uint64_t kInitialStream = 0;
constexpr std::uint64_t kLoopStream = 1;

// Slack on the eps-heavy test so that mu(R) = eps survives rounding.
constexpr double kHeavyTolerance = 1e-12;

double floored_log(double x) { return std::log(std::max(x, std::numbers::e)); }

}  // namespace

void AlgoConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("invalid config: " + what);
  };
  if (!(beta > 0.0)) fail("beta must be positive");
  if (!(gamma > 0.0)) fail("gamma must be positive");
  if (!(gamma <= 0.25)) fail("gamma must be at most 1/4");
  if (!(beta + gamma <= 1.0)) fail("beta + gamma must be at most 1");
  if (d < 1) fail("d must be at least 1");
  if (!(prob_scale > 0.0) || !std::isfinite(prob_scale)) {
    fail("prob_scale must be positive and finite");
  }
  if (!(phi.c > 0.0)) fail("phi constant must be positive");
}

double oracle_call_constant(double beta, double gamma) {
  return 24.0 * 48.0 / (beta * (1.5 - beta - gamma));
}

std::size_t default_max_oracle_calls(const AlgoConfig& cfg, double z_star) {
  return 10 * static_cast<std::size_t>(
                  std::ceil(oracle_call_constant(cfg.beta, cfg.gamma) * z_star));
}

double initial_sample_factor(const LpSolution& lp, const AlgoConfig& cfg) {
  cfg.validate();
  const double d = static_cast<double>(cfg.d);
  const double q = 0.75 - cfg.beta / 2.0;
  const double phi = cfg.phi(8.0 * d / (cfg.beta * lp.eps_star), 48.0 * d / cfg.beta);
  if (!(phi >= 1.0)) {
    throw std::invalid_argument("phi evaluates to " + std::to_string(phi) +
                                " < 1 at the initial-sample arguments");
  }
  const double cell_term = floored_log(d * d * phi * phi);
  const double vc_term = d * floored_log(1.0 / (q * lp.eps_star));
  return cfg.prob_scale * 2.0 / (q * lp.eps_star) * std::max(cell_term, vc_term);
}

PointSet initial_sample(const SetSystem& system, const LpSolution& lp,
                        const AlgoConfig& cfg, Rng& rng) {
  const double factor = initial_sample_factor(lp, cfg);
  PointSet out;
  for (PointIndex j = 0; j < system.num_points(); ++j) {
    // One draw per point keeps the stream aligned across configurations.
    const double u = rng.uniform();
    if (u < std::min(1.0, factor * lp.mu_star[j])) out.push_back(j);
  }
  return out;
}

PointSet initial_sample(const SetSystem& system, const LpSolution& lp,
                        const AlgoConfig& cfg) {
  Rng rng = Rng(cfg.seed).split(kInitialStream);
  return initial_sample(system, lp, cfg, rng);
}

double resample_factor(const SetSystem& system, const LpSolution& lp,
                       const AlgoConfig& cfg, RangeIndex range_index) {
  const double weight = lp.mu_star.of(system.range(range_index));
  if (!(weight > 0.0)) {
    throw ZeroWeightRangeError("zero-weight unhit range " +
                               std::to_string(range_index));
  }
  const double d = static_cast<double>(cfg.d);
  const double term = std::max(std::log(2.0), d * std::log(1.0 / cfg.gamma));
  return cfg.prob_scale * 2.0 / (cfg.gamma * weight) * term;
}

PointSet resample_set(const SetSystem& system, const LpSolution& lp,
                      const AlgoConfig& cfg, RangeIndex range_index, Rng& rng) {
  const double factor = resample_factor(system, lp, cfg, range_index);
  PointSet out;
  for (PointIndex j : system.range(range_index)) {
    const double u = rng.uniform();
    if (u < std::min(1.0, factor * lp.mu_star[j])) out.push_back(j);
  }
  return out;
}

UnhitOracle::UnhitOracle(const SetSystem& system)
    : system_(&system),
      in_set_(system.num_points(), 0),
      hit_count_(system.num_ranges(), 0) {}

bool UnhitOracle::insert(PointIndex point) {
  if (point >= in_set_.size()) {
    throw std::out_of_range("point index " + std::to_string(point) +
                            " out of bounds");
  }
  if (in_set_[point]) return false;
  in_set_[point] = 1;
  for (RangeIndex r : system_->ranges_containing(point)) ++hit_count_[r];
  return true;
}

void UnhitOracle::insert(std::span<const PointIndex> points) {
  for (PointIndex p : points) insert(p);
}

std::optional<RangeIndex> UnhitOracle::next_unhit() {
  while (cursor_ < hit_count_.size() && hit_count_[cursor_] > 0) ++cursor_;
  if (cursor_ == hit_count_.size()) return std::nullopt;
  return cursor_;
}

PointSet UnhitOracle::members() const {
  PointSet out;
  for (PointIndex j = 0; j < in_set_.size(); ++j) {
    if (in_set_[j]) out.push_back(j);
  }
  return out;
}

bool is_hitting_set(const SetSystem& system, std::span<const PointIndex> points) {
  std::vector<char> in_set(system.num_points(), 0);
  for (PointIndex p : points) {
    if (p >= system.num_points()) return false;
    in_set[p] = 1;
  }
  return std::all_of(system.ranges().begin(), system.ranges().end(),
                     [&](const PointSet& r) {
                       return std::any_of(r.begin(), r.end(),
                                          [&](PointIndex p) { return in_set[p] != 0; });
                     });
}

RunReport find_hitting_set(const SetSystem& system, const AlgoConfig& cfg) {
  cfg.validate();
  return find_hitting_set(system, solve_lp(system), cfg);
}

RunReport find_hitting_set(const SetSystem& system, const LpSolution& lp,
                           const AlgoConfig& cfg) {
  cfg.validate();
  if (lp.mu_star.size() != system.num_points()) {
    throw std::invalid_argument("LP solution does not match the set system");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::size_t cap = cfg.max_oracle_calls != 0
                              ? cfg.max_oracle_calls
                              : default_max_oracle_calls(cfg, lp.z_star);

  RunReport report;
  report.rng_seed = cfg.seed;
  const Rng root(cfg.seed);
  Rng init_rng = root.split(kInitialStream);
  Rng loop_rng = root.split(kLoopStream);

  UnhitOracle oracle(system);
  const PointSet initial = initial_sample(system, lp, cfg, init_rng);
  oracle.insert(initial);
  report.initial_sample_size = initial.size();

  while (const auto unhit = oracle.next_unhit()) {
    if (report.oracle_calls == cap) {
      throw CapExceededError("netfinder exceeded " + std::to_string(cap) +
                             " oracle calls");
    }
    ++report.oracle_calls;
    std::size_t added = 0;
    for (PointIndex p : resample_set(system, lp, cfg, *unhit, loop_rng)) {
      added += oracle.insert(p) ? 1 : 0;
    }
    report.added_per_call.push_back(added);
  }

  report.hitting_set = oracle.members();
  if (!is_hitting_set(system, report.hitting_set)) {
    throw std::logic_error("netfinder returned a set that misses a range");
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

PointSet sample_epsilon_net(const SetSystem& system, const WeightVector& w,
                            double eps, double gamma, std::size_t d,
                            std::uint64_t seed) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("eps must be in (0, 1]");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in (0, 1)");
  }
  if (w.size() != system.num_points()) {
    throw std::invalid_argument("weight vector size does not match m");
  }
  const double term = std::max(std::log(1.0 / gamma),
                               static_cast<double>(d) * std::log(1.0 / eps));
  const double factor = 2.0 / eps * term;
  Rng rng(seed);
  PointSet out;
  for (PointIndex j = 0; j < system.num_points(); ++j) {
    const double u = rng.uniform();
    if (u < std::min(1.0, factor * w[j])) out.push_back(j);
  }
  return out;
}

bool is_epsilon_net(const SetSystem& system, const WeightVector& w, double eps,
                    std::span<const PointIndex> points) {
  if (w.size() != system.num_points()) {
    throw std::invalid_argument("weight vector size does not match m");
  }
  PointSet sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  for (const PointSet& r : system.ranges()) {
    if (w.of(r) + kHeavyTolerance >= eps && !intersects(r, sorted)) return false;
  }
  return true;
}

}  // namespace hitset
