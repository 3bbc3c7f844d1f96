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

#ifndef HITSET_IO_HPP_
#define HITSET_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "hitset/core.hpp"
#include "hitset/geom.hpp"
#include "hitset/lp.hpp"
#include "hitset/netfinder.hpp"

namespace hitset {

// Instance file:
//
//   {"m": int, "ranges": [[int, ...], ...], "weights": [float, ...]?,
//    "points": [[x, y], ...]?, "shapes": {"class": str, "items": [...]}?}
//
// Indices are 0-based; ranges are written sorted. Shape items are
//   {"type": "disc", "center": [x, y], "radius": r}
//   {"type": "rect", "lo": [x, y], "hi": [x, y]}
//   {"type": "halfplane", "a": a, "b": b, "c": c}
//   {"type": "interval", "lo": lo, "hi": hi}
struct Instance {
  SetSystem system;
  std::optional<WeightVector> weights;
  std::vector<Eigen::Vector2d> points;
  std::optional<ShapeClass> shape_class;
  std::vector<Shape> shapes;
};

// Throws std::invalid_argument (wrapping JSON errors) on malformed input.
Instance instance_from_json(const nlohmann::json& j);
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

nlohmann::json to_json(const Instance& instance);
Instance make_instance(const GeometryInstance& geometry);

nlohmann::json shape_to_json(const Shape& shape);
// Throws std::invalid_argument on an unknown "type" tag.
Shape shape_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LpSolution& lp);
nlohmann::json to_json(const AlgoConfig& cfg);
// Wall time is included only when `with_timing` is set, so that reports are
// reproducible byte for byte by default.
nlohmann::json to_json(const RunReport& report, bool with_timing);

// Canonical text: 2-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace hitset

#endif  // HITSET_IO_HPP_
