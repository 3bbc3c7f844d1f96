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

#include "hitset/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hitset/error.hpp"
#include "hitset/rng.hpp"

namespace hitset {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Leading constants c, from tools/calibrate_scc.cpp: ceil(1.25 x) of the
// largest ratio cells(l, k) / (l^a k^b) seen on generated instances with
// l <= 10. For the random class the family l * k^d alone undercounts the
// empty cell (2 cells at l = k = 1), so it gets a constant too.
constexpr double kDiscConstant = 15.0;
constexpr double kRectConstant = 3.0;
constexpr double kHalfplaneConstant = 10.0;
constexpr double kIntervalConstant = 4.0;
constexpr double kRandomConstant = 3.0;

}  // namespace

bool contains(const Shape& shape, const Eigen::Vector2d& point) {
  constexpr double tol = kContainmentTolerance;
  return std::visit(
      Overloaded{
          [&](const Disc& s) {
            return (point - s.center).norm() <= s.radius + tol;
          },
          [&](const Rect& s) {
            return (point.array() >= s.lo.array() - tol).all() &&
                   (point.array() <= s.hi.array() + tol).all();
          },
          [&](const HalfPlane& s) {
            return s.a * point.x() + s.b * point.y() <= s.c + tol;
          },
          [&](const Interval& s) {
            return point.x() >= s.lo - tol && point.x() <= s.hi + tol;
          },
      },
      shape);
}

std::string_view to_string(ShapeClass cls) {
  switch (cls) {
    case ShapeClass::kDiscs:
      return "discs";
    case ShapeClass::kRects:
      return "rects";
    case ShapeClass::kHalfplanes:
      return "halfplanes";
    case ShapeClass::kIntervals:
      return "intervals";
    case ShapeClass::kRandom:
      return "random";
  }
  return "unknown";
}

ShapeClass parse_shape_class(std::string_view name) {
  for (ShapeClass cls : {ShapeClass::kDiscs, ShapeClass::kRects,
                         ShapeClass::kHalfplanes, ShapeClass::kIntervals,
                         ShapeClass::kRandom}) {
    if (to_string(cls) == name) return cls;
  }
  throw std::invalid_argument("unknown shape class '" + std::string(name) + "'");
}

double SccFamily::operator()(double l, double k) const {
  return c * std::pow(l, a) * std::pow(k, b);
}

SccFamily scc_family(ShapeClass cls, std::size_t d) {
  switch (cls) {
    case ShapeClass::kDiscs:
      return {0.0, 1.0, kDiscConstant};
    case ShapeClass::kRects:
      return {1.0, 2.0, kRectConstant};
    case ShapeClass::kHalfplanes:
      return {0.0, 1.0, kHalfplaneConstant};
    case ShapeClass::kIntervals:
      return {1.0, 0.0, kIntervalConstant};
    case ShapeClass::kRandom:
      return {1.0, static_cast<double>(d), kRandomConstant};
  }
  throw std::invalid_argument("unknown shape class");
}

std::size_t vc_bound(ShapeClass cls) {
  switch (cls) {
    case ShapeClass::kDiscs:
      return 3;
    case ShapeClass::kRects:
      return 4;
    case ShapeClass::kHalfplanes:
      return 3;
    case ShapeClass::kIntervals:
      return 2;
    case ShapeClass::kRandom:
      return 0;
  }
  return 0;
}

SetSystem derive_system(const std::vector<Eigen::Vector2d>& points,
                        const std::vector<Shape>& shapes) {
  std::vector<PointSet> ranges(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (contains(shapes[i], points[j])) {
        ranges[i].push_back(static_cast<PointIndex>(j));
      }
    }
  }
  return SetSystem(points.size(), std::move(ranges));
}

namespace {

Shape draw_shape(ShapeClass cls, const GenParams& p, Rng& rng) {
  switch (cls) {
    case ShapeClass::kDiscs: {
      Eigen::Vector2d c(rng.uniform(), rng.uniform());
      return Disc{c, rng.uniform_in(p.disc_radius_min, p.disc_radius_max)};
    }
    case ShapeClass::kRects: {
      Eigen::Vector2d lo(rng.uniform(), rng.uniform());
      Eigen::Vector2d side(rng.uniform_in(p.rect_side_min, p.rect_side_max),
                           rng.uniform_in(p.rect_side_min, p.rect_side_max));
      return Rect{lo, lo + side};
    }
    case ShapeClass::kHalfplanes: {
      const double theta = rng.uniform_in(0.0, 2.0 * std::numbers::pi);
      const double a = std::cos(theta);
      const double b = std::sin(theta);
      // Boundary through a uniform point of the square.
      const double x = rng.uniform();
      const double y = rng.uniform();
      return HalfPlane{a, b, a * x + b * y};
    }
    case ShapeClass::kIntervals: {
      const double center = rng.uniform();
      const double len =
          rng.uniform_in(p.interval_length_min, p.interval_length_max);
      return Interval{center - len / 2, center + len / 2};
    }
    case ShapeClass::kRandom:
      break;
  }
  throw std::invalid_argument("shape class has no geometric shapes");
}

void check_params(ShapeClass cls, const GenParams& p) {
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("bad generator parameter: " + what);
  };
  switch (cls) {
    case ShapeClass::kDiscs:
      if (!(p.disc_radius_min >= 0 && p.disc_radius_min <= p.disc_radius_max))
        bad("need 0 <= disc_radius_min <= disc_radius_max");
      break;
    case ShapeClass::kRects:
      if (!(p.rect_side_min >= 0 && p.rect_side_min <= p.rect_side_max))
        bad("need 0 <= rect_side_min <= rect_side_max");
      break;
    case ShapeClass::kIntervals:
      if (!(p.interval_length_min >= 0 &&
            p.interval_length_min <= p.interval_length_max))
        bad("need 0 <= interval_length_min <= interval_length_max");
      break;
    case ShapeClass::kRandom:
      if (!(p.density >= 0 && p.density <= 1)) bad("density must be in [0, 1]");
      break;
    case ShapeClass::kHalfplanes:
      break;
  }
  if (p.retry_cap == 0) bad("retry_cap must be positive");
}

}  // namespace

GeometryInstance gen_instance(ShapeClass cls, std::size_t m, std::size_t n,
                              std::uint64_t seed, const GenParams& params) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("instance needs m >= 1 and n >= 1");
  }
  check_params(cls, params);
  GeometryInstance out;
  out.shape_class = cls;
  const Rng root(seed);

  if (cls == ShapeClass::kRandom) {
    Rng rng = root.split(2);
    std::vector<PointSet> ranges(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t attempt = 0;
      while (ranges[i].empty()) {
        if (attempt++ == params.retry_cap) {
          throw CapExceededError("random range " + std::to_string(i) +
                                 " stayed empty after " +
                                 std::to_string(params.retry_cap) +
                                 " draws; density too low");
        }
        for (std::size_t j = 0; j < m; ++j) {
          if (rng.bernoulli(params.density)) {
            ranges[i].push_back(static_cast<PointIndex>(j));
          }
        }
      }
    }
    out.system = SetSystem(m, std::move(ranges));
    return out;
  }

  Rng point_rng = root.split(1);
  out.points.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double x = point_rng.uniform();
    const double y = cls == ShapeClass::kIntervals ? 0.0 : point_rng.uniform();
    out.points.emplace_back(x, y);
  }
  if (cls == ShapeClass::kIntervals) {
    std::sort(out.points.begin(), out.points.end(),
              [](const auto& a, const auto& b) { return a.x() < b.x(); });
  }

  Rng shape_rng = root.split(2);
  out.shapes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t attempt = 0;
    for (;;) {
      if (attempt++ == params.retry_cap) {
        throw CapExceededError("shape " + std::to_string(i) +
                               " contained no point after " +
                               std::to_string(params.retry_cap) +
                               " draws; parameters are degenerate");
      }
      Shape s = draw_shape(cls, params, shape_rng);
      const bool hits = std::any_of(
          out.points.begin(), out.points.end(),
          [&](const Eigen::Vector2d& pt) { return contains(s, pt); });
      if (hits) {
        out.shapes.push_back(s);
        break;
      }
    }
  }
  out.system = derive_system(out.points, out.shapes);
  return out;
}

}  // namespace hitset
