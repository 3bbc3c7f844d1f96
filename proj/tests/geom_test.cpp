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

#include <cmath>

#include "doctest.h"
#include "hitset/error.hpp"
#include "hitset/geom.hpp"
#include "hitset/lp.hpp"

namespace hitset {
namespace {

TEST_CASE("contains: closed regions") {
  CHECK(contains(Disc{{0, 0}, 1.0}, {1.0, 0.0}));
  CHECK(contains(Disc{{0, 0}, 1.0}, {std::sqrt(0.5), std::sqrt(0.5)}));
  CHECK_FALSE(contains(Disc{{0, 0}, 1.0}, {1.0 + 1e-9, 0.0}));
  CHECK_FALSE(contains(Rect{{0, 0}, {1, 1}}, {2.0, 0.0}));
  CHECK(contains(Rect{{0, 0}, {1, 1}}, {1.0, 1.0}));
  CHECK(contains(HalfPlane{1, 0, 0}, {-5.0, 3.0}));
  CHECK(contains(HalfPlane{1, 0, 0}, {0.0, 7.0}));
  CHECK_FALSE(contains(HalfPlane{1, 0, 0}, {0.1, 0.0}));
  CHECK(contains(Interval{0.2, 0.4}, {0.4, 99.0}));
  CHECK_FALSE(contains(Interval{0.2, 0.4}, {0.41, 0.0}));
}

TEST_CASE("contiguous intervals on 4 points have VC dimension 2") {
  std::vector<Eigen::Vector2d> points{{0.1, 0}, {0.2, 0}, {0.3, 0}, {0.4, 0}};
  std::vector<Shape> shapes;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) shapes.push_back(Interval{points[i].x(), points[j].x()});
  }
  CHECK(shapes.size() == 10);  // C(4,2) + 4
  const SetSystem s = derive_system(points, shapes);
  CHECK(s.range(1).size() == 2);
  CHECK(vc_dimension_exact(s).value == 2);
}

TEST_CASE("gen_instance is deterministic in its inputs") {
  const auto a = gen_instance(ShapeClass::kDiscs, 50, 30, 7);
  const auto b = gen_instance(ShapeClass::kDiscs, 50, 30, 7);
  const auto c = gen_instance(ShapeClass::kDiscs, 50, 30, 8);
  CHECK(a.system.ranges() == b.system.ranges());
  CHECK(a.points == b.points);
  CHECK(a.system.ranges() != c.system.ranges());
}

TEST_CASE("gen_instance: every class yields nonempty ranges matching containment") {
  for (ShapeClass cls : {ShapeClass::kDiscs, ShapeClass::kRects, ShapeClass::kHalfplanes,
                         ShapeClass::kIntervals, ShapeClass::kRandom}) {
    const auto inst = gen_instance(cls, 40, 25, 3);
    CHECK(inst.system.num_points() == 40);
    CHECK(inst.system.num_ranges() == 25);
    CHECK_FALSE(inst.system.has_empty_range());
    if (cls == ShapeClass::kRandom) {
      CHECK(inst.shapes.empty());
      continue;
    }
    REQUIRE(inst.shapes.size() == 25);
    CHECK(derive_system(inst.points, inst.shapes).ranges() == inst.system.ranges());
  }
  const auto line = gen_instance(ShapeClass::kIntervals, 20, 5, 1);
  for (std::size_t j = 1; j < 20; ++j) {
    CHECK(line.points[j - 1].x() <= line.points[j].x());
    CHECK(line.points[j].y() == 0.0);
  }
}

TEST_CASE("random class at density 1 gives full ranges and z* = 1") {
  GenParams p;
  p.density = 1.0;
  const auto inst = gen_instance(ShapeClass::kRandom, 12, 9, 5, p);
  for (const auto& r : inst.system.ranges()) CHECK(r.size() == 12);
  CHECK(solve_lp(inst.system).z_star == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gen_instance errors") {
  GenParams degenerate;
  degenerate.disc_radius_min = degenerate.disc_radius_max = 0.0;
  degenerate.retry_cap = 10;
  CHECK_THROWS_AS(gen_instance(ShapeClass::kDiscs, 5, 3, 1, degenerate), CapExceededError);
  GenParams empty;
  empty.density = 0.0;
  empty.retry_cap = 3;
  CHECK_THROWS_AS(gen_instance(ShapeClass::kRandom, 5, 3, 1, empty), CapExceededError);
  CHECK_THROWS_AS(gen_instance(ShapeClass::kDiscs, 0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_instance(ShapeClass::kDiscs, 3, 0, 1), std::invalid_argument);
  GenParams inverted;
  inverted.rect_side_min = 0.5;
  inverted.rect_side_max = 0.1;
  CHECK_THROWS_AS(gen_instance(ShapeClass::kRects, 3, 3, 1, inverted),
                  std::invalid_argument);
}

TEST_CASE("shape class names") {
  CHECK(parse_shape_class("halfplanes") == ShapeClass::kHalfplanes);
  CHECK(to_string(ShapeClass::kRects) == "rects");
  CHECK_THROWS_AS(parse_shape_class("triangles"), std::invalid_argument);
}

TEST_CASE("scc_family exponents per class") {
  const SccFamily discs = scc_family(ShapeClass::kDiscs);
  CHECK(discs.a == 0.0);
  CHECK(discs.b == 1.0);
  const SccFamily rects = scc_family(ShapeClass::kRects);
  CHECK(rects.a == 1.0);
  CHECK(rects.b == 2.0);
  CHECK(rects(2.0, 3.0) == doctest::Approx(rects.c * 18.0));
  const SccFamily intervals = scc_family(ShapeClass::kIntervals);
  CHECK(intervals.a == 1.0);
  CHECK(intervals.b == 0.0);
  const SccFamily halfplanes = scc_family(ShapeClass::kHalfplanes);
  CHECK(halfplanes.a == 0.0);
  CHECK(halfplanes.b == 1.0);
  const SccFamily random = scc_family(ShapeClass::kRandom, 4);
  CHECK(random.a == 1.0);
  CHECK(random.b == 4.0);
}

TEST_CASE("calibrated families bound the measured cell counts") {
  // Exhaustive counts for m <= 12, random column orders above.
  for (ShapeClass cls : {ShapeClass::kDiscs, ShapeClass::kRects, ShapeClass::kHalfplanes,
                         ShapeClass::kIntervals, ShapeClass::kRandom}) {
    for (const auto& [m, n] : {std::pair<std::size_t, std::size_t>{10, 40}, {12, 80}, {30, 60}}) {
      for (std::uint64_t seed = 11; seed <= 12; ++seed) {
        const auto inst = gen_instance(cls, m, n, seed);
        std::size_t d = 1;
        if (cls == ShapeClass::kRandom) {
          d = std::max<std::size_t>(1, vc_dimension_exact(inst.system, 12).value);
        }
        const SccFamily phi = scc_family(cls, d);
        for (std::size_t l = 1; l <= 10; ++l) {
          for (std::size_t k = 1; k <= l; ++k) {
            const auto cells = count_shallow_cells(inst.system, nullptr, l, k, 4, seed);
            INFO(to_string(cls), " m=", m, " l=", l, " k=", k);
            CHECK(static_cast<double>(cells) <=
                  phi(static_cast<double>(l), static_cast<double>(k)));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace hitset
