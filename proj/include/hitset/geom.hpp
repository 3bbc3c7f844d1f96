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

#ifndef HITSET_GEOM_HPP_
#define HITSET_GEOM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "hitset/core.hpp"

namespace hitset {

// Boundary slack for closed containment.
inline constexpr double kContainmentTolerance = 1e-12;

struct Disc {
  Eigen::Vector2d center;
  double radius;
};

// Axis-parallel, given by its lower-left and upper-right corners.
struct Rect {
  Eigen::Vector2d lo;
  Eigen::Vector2d hi;
};

// { (x, y) : a x + b y <= c }.
struct HalfPlane {
  double a;
  double b;
  double c;
};

// [lo, hi] on the x-axis; the point's y coordinate is ignored.
struct Interval {
  double lo;
  double hi;
};

using Shape = std::variant<Disc, Rect, HalfPlane, Interval>;

bool contains(const Shape& shape, const Eigen::Vector2d& point);

enum class ShapeClass { kDiscs, kRects, kHalfplanes, kIntervals, kRandom };

std::string_view to_string(ShapeClass cls);
// Throws std::invalid_argument on an unknown name.
ShapeClass parse_shape_class(std::string_view name);

// Shallow cell complexity family phi(l, k) = c * l^a * k^b, evaluated as a
// real function.
struct SccFamily {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;

  double operator()(double l, double k) const;
};

// Family for a shape class with the calibrated leading constant. `d` is the
// VC bound used by the Sauer-style fallback of the random class.
SccFamily scc_family(ShapeClass cls, std::size_t d = 1);

// Known VC dimension of the range family in the plane (random: none, 0).
std::size_t vc_bound(ShapeClass cls);

struct GenParams {
  double disc_radius_min = 0.05;
  double disc_radius_max = 0.3;
  double rect_side_min = 0.05;
  double rect_side_max = 0.5;
  double interval_length_min = 0.02;
  double interval_length_max = 0.3;
  // Inclusion probability per (point, range) for the random class.
  double density = 0.2;
  std::size_t retry_cap = 1000;
};

struct GeometryInstance {
  ShapeClass shape_class = ShapeClass::kRandom;
  std::vector<Eigen::Vector2d> points;
  // Empty for the random class.
  std::vector<Shape> shapes;
  SetSystem system;
};

// Points uniform in the unit square (on [0,1] x {0} for intervals, sorted by
// x). Each shape is redrawn until it contains a point; throws
// CapExceededError after params.retry_cap attempts for one shape.
GeometryInstance gen_instance(ShapeClass cls, std::size_t m, std::size_t n,
                              std::uint64_t seed, const GenParams& params = {});

// Range j = indices of points contained in shapes[j].
SetSystem derive_system(const std::vector<Eigen::Vector2d>& points,
                        const std::vector<Shape>& shapes);

}  // namespace hitset

#endif  // HITSET_GEOM_HPP_
