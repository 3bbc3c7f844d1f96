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

#include "hitset/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hitset/error.hpp"
#include "hitset/lp.hpp"

namespace hitset {

namespace {

void require_nonempty(const SetSystem& system) {
  for (std::size_t i = 0; i < system.num_ranges(); ++i) {
    if (system.ranges()[i].empty()) {
      throw InfeasibleError("range " + std::to_string(i) +
                            " is empty; no hitting set exists");
    }
  }
}

}  // namespace

PointSet greedy_hitting_set(const SetSystem& system) {
  require_nonempty(system);
  const std::size_t m = system.num_points();
  std::vector<std::size_t> score(m);
  for (PointIndex j = 0; j < m; ++j) score[j] = system.ranges_containing(j).size();
  std::vector<char> hit(system.num_ranges(), 0);
  std::size_t remaining = system.num_ranges();

  PointSet chosen;
  while (remaining > 0) {
    PointIndex best = 0;
    for (PointIndex j = 1; j < m; ++j) {
      if (score[j] > score[best]) best = j;
    }
    chosen.push_back(best);
    for (RangeIndex r : system.ranges_containing(best)) {
      if (hit[r]) continue;
      hit[r] = 1;
      --remaining;
      for (PointIndex p : system.ranges()[r]) --score[p];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

class BranchAndBound {
 public:
  // `floor` is a known lower bound; the search stops once it is matched.
  BranchAndBound(const SetSystem& system, std::size_t floor)
      : system_(system),
        hit_count_(system.num_ranges(), 0),
        forbidden_(system.num_points(), 0),
        used_(system.num_points(), 0),
        floor_(floor) {}

  // Searches for a hitting set of size < bound_; updates best_ on success.
  void run(std::size_t bound) {
    bound_ = bound;
    search();
  }

  const std::optional<PointSet>& best() const { return best_; }

 private:
  void take(PointIndex p, int delta) {
    for (RangeIndex r : system_.ranges_containing(p)) {
      hit_count_[r] = static_cast<std::uint32_t>(
          static_cast<int>(hit_count_[r]) + delta);
    }
  }

  // Greedy family of pairwise-disjoint unhit ranges, smallest first; each
  // needs its own point.
  std::size_t disjoint_bound(const std::vector<RangeIndex>& unhit) {
    std::size_t count = 0;
    std::fill(used_.begin(), used_.end(), 0);
    for (RangeIndex r : unhit) {
      const auto& pts = system_.ranges()[r];
      if (std::any_of(pts.begin(), pts.end(), [&](PointIndex p) { return used_[p]; })) {
        continue;
      }
      for (PointIndex p : pts) used_[p] = 1;
      ++count;
    }
    return count;
  }

  void search() {
    if (best_ && bound_ <= floor_) return;
    std::vector<RangeIndex> unhit;
    RangeIndex pick = 0;
    std::size_t pick_size = std::numeric_limits<std::size_t>::max();
    for (RangeIndex r = 0; r < system_.num_ranges(); ++r) {
      if (hit_count_[r] > 0) continue;
      unhit.push_back(r);
      std::size_t open = 0;
      for (PointIndex p : system_.ranges()[r]) open += forbidden_[p] ? 0 : 1;
      if (open < pick_size) {
        pick_size = open;
        pick = r;
      }
    }
    if (unhit.empty()) {
      best_ = current_;
      std::sort(best_->begin(), best_->end());
      bound_ = current_.size();
      return;
    }
    if (pick_size == 0) return;
    if (current_.size() + 1 >= bound_) return;
    std::stable_sort(unhit.begin(), unhit.end(), [&](RangeIndex a, RangeIndex b) {
      return system_.ranges()[a].size() < system_.ranges()[b].size();
    });
    if (current_.size() + disjoint_bound(unhit) >= bound_) return;

    // Branch i takes the i-th open point and excludes the earlier ones, so
    // each hitting set is reached once.
    std::vector<PointIndex> excluded;
    for (PointIndex p : system_.ranges()[pick]) {
      if (forbidden_[p]) continue;
      current_.push_back(p);
      take(p, +1);
      search();
      take(p, -1);
      current_.pop_back();
      forbidden_[p] = 1;
      excluded.push_back(p);
      if (current_.size() + 1 >= bound_) break;
    }
    for (PointIndex p : excluded) forbidden_[p] = 0;
  }

  const SetSystem& system_;
  std::vector<std::uint32_t> hit_count_;
  std::vector<char> forbidden_;
  std::vector<char> used_;
  std::vector<PointIndex> current_;
  std::optional<PointSet> best_;
  std::size_t bound_ = 0;
  std::size_t floor_;
};

}  // namespace

std::optional<PointSet> exact_hitting_set(const SetSystem& system,
                                          std::size_t size_cap) {
  require_nonempty(system);
  if (system.num_ranges() == 0) return PointSet{};

  const double z_star = solve_lp(system).z_star;
  const auto lower = static_cast<std::size_t>(std::ceil(z_star - 1e-6));
  if (lower > size_cap) return std::nullopt;

  PointSet greedy = greedy_hitting_set(system);
  if (greedy.size() <= lower) return greedy;

  BranchAndBound bnb(system, lower);
  // Look for anything strictly smaller than both greedy and cap + 1.
  bnb.run(std::min(greedy.size(), size_cap + 1));
  if (bnb.best()) return bnb.best();
  if (greedy.size() <= size_cap) return greedy;
  return std::nullopt;
}

}  // namespace hitset
