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

// Measures the leading constant c of each shape class's cell complexity
// family phi(l, k) = c l^a k^b: the largest ratio cells(l, k) / (l^a k^b)
// over generated instances, l <= 10, 1 <= k <= l. Exhaustive column
// enumeration for m <= 12, random column orders above that. The constants
// frozen in src/geom.cpp are ceil(1.25 * max ratio).

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hitset/core.hpp"
#include "hitset/geom.hpp"

int main() {
  using namespace hitset;
  const ShapeClass classes[] = {ShapeClass::kDiscs, ShapeClass::kRects,
                                ShapeClass::kHalfplanes, ShapeClass::kIntervals,
                                ShapeClass::kRandom};
  const std::size_t sizes[][2] = {{8, 20}, {10, 40}, {12, 60}, {12, 120},
                                  {40, 60}, {100, 80}};
  for (ShapeClass cls : classes) {
    double worst = 0.0;
    std::size_t worst_l = 0, worst_k = 0;
    for (const auto& size : sizes) {
      for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto inst = gen_instance(cls, size[0], size[1], seed);
        std::size_t d = 1;
        if (cls == ShapeClass::kRandom) {
          d = std::max<std::size_t>(1, vc_dimension_exact(inst.system, 12).value);
        }
        const SccFamily shape = scc_family(cls, d);
        const std::size_t max_l = std::min<std::size_t>(10, size[0]);
        for (std::size_t l = 1; l <= max_l; ++l) {
          for (std::size_t k = 1; k <= l; ++k) {
            const auto cells = count_shallow_cells(inst.system, nullptr, l, k, 32, seed);
            const double ratio = static_cast<double>(cells) /
                                 (std::pow(l, shape.a) * std::pow(k, shape.b));
            if (ratio > worst) {
              worst = ratio;
              worst_l = l;
              worst_k = k;
            }
          }
        }
      }
    }
    std::printf("%-10s max ratio %.4f at (l=%zu, k=%zu)  ->  c = %.0f\n",
                std::string(to_string(cls)).c_str(), worst, worst_l, worst_k,
                std::ceil(1.25 * worst));
  }
}
