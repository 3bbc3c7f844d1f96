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

#include "hitset/io.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>
#include <type_traits>

namespace hitset {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json point_to_json(const Eigen::Vector2d& p) { return json::array({p.x(), p.y()}); }

Eigen::Vector2d point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("a point must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json shape_to_json(const Shape& shape) {
  return std::visit(
      Overloaded{
          [](const Disc& s) {
            return json{{"type", "disc"},
                        {"center", point_to_json(s.center)},
                        {"radius", s.radius}};
          },
          [](const Rect& s) {
            return json{{"type", "rect"},
                        {"lo", point_to_json(s.lo)},
                        {"hi", point_to_json(s.hi)}};
          },
          [](const HalfPlane& s) {
            return json{{"type", "halfplane"}, {"a", s.a}, {"b", s.b}, {"c", s.c}};
          },
          [](const Interval& s) {
            return json{{"type", "interval"}, {"lo", s.lo}, {"hi", s.hi}};
          },
      },
      shape);
}

Shape shape_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "disc") {
    return Disc{point_from_json(j.at("center")), j.at("radius").get<double>()};
  }
  if (type == "rect") {
    return Rect{point_from_json(j.at("lo")), point_from_json(j.at("hi"))};
  }
  if (type == "halfplane") {
    return HalfPlane{j.at("a").get<double>(), j.at("b").get<double>(),
                     j.at("c").get<double>()};
  }
  if (type == "interval") {
    return Interval{j.at("lo").get<double>(), j.at("hi").get<double>()};
  }
  throw std::invalid_argument("unknown shape type '" + type + "'");
}

Instance instance_from_json(const json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
    const auto m = j.at("m").get<std::int64_t>();
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    std::vector<PointSet> ranges;
    for (const json& r : j.at("ranges")) {
      PointSet pts;
      for (const json& p : r) {
        const auto idx = p.get<std::int64_t>();
        if (idx < 0 || idx >= m) {
          throw std::invalid_argument("point index " + std::to_string(idx) +
                                      " outside [0, m)");
        }
        pts.push_back(static_cast<PointIndex>(idx));
      }
      std::sort(pts.begin(), pts.end());
      if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
        throw std::invalid_argument("range lists a point twice");
      }
      ranges.push_back(std::move(pts));
    }
    Instance out{SetSystem(static_cast<std::size_t>(m), std::move(ranges)),
                 std::nullopt, {}, std::nullopt, {}};
    if (j.contains("weights")) {
      const auto w = j.at("weights").get<std::vector<double>>();
      if (w.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("weights must have m entries");
      }
      out.weights.emplace(Eigen::Map<const Eigen::VectorXd>(
          w.data(), static_cast<Eigen::Index>(w.size())));
    }
    if (j.contains("points")) {
      for (const json& p : j.at("points")) out.points.push_back(point_from_json(p));
      if (out.points.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("points must have m entries");
      }
    }
    if (j.contains("shapes")) {
      const json& shapes = j.at("shapes");
      out.shape_class = parse_shape_class(shapes.at("class").get<std::string>());
      for (const json& s : shapes.value("items", json::array())) {
        out.shapes.push_back(shape_from_json(s));
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
}

Instance read_instance(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
  return instance_from_json(j);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file '" + path + "'");
  return read_instance(in);
}

json to_json(const Instance& instance) {
  json ranges = json::array();
  for (const PointSet& r : instance.system.ranges()) ranges.push_back(r);
  json j{{"m", instance.system.num_points()}, {"ranges", std::move(ranges)}};
  if (instance.weights) {
    const auto& v = instance.weights->values();
    j["weights"] = std::vector<double>(v.data(), v.data() + v.size());
  }
  if (!instance.points.empty()) {
    json pts = json::array();
    for (const auto& p : instance.points) pts.push_back(point_to_json(p));
    j["points"] = std::move(pts);
  }
  if (instance.shape_class) {
    json items = json::array();
    for (const Shape& s : instance.shapes) items.push_back(shape_to_json(s));
    j["shapes"] = json{{"class", std::string(to_string(*instance.shape_class))},
                       {"items", std::move(items)}};
  }
  return j;
}

Instance make_instance(const GeometryInstance& geometry) {
  return Instance{geometry.system, std::nullopt, geometry.points,
                  geometry.shape_class, geometry.shapes};
}

json to_json(const LpSolution& lp) {
  const auto& mu = lp.mu_star.values();
  return json{
      {"status", "optimal"},
      {"z_star", lp.z_star},
      {"eps_star", lp.eps_star},
      {"mu_star", std::vector<double>(mu.data(), mu.data() + mu.size())},
      {"y_star", std::vector<double>(lp.y_star.data(),
                                     lp.y_star.data() + lp.y_star.size())},
      {"iterations", lp.iterations},
  };
}

json to_json(const AlgoConfig& cfg) {
  return json{
      {"beta", cfg.beta},
      {"gamma", cfg.gamma},
      {"d", cfg.d},
      {"phi", {{"a", cfg.phi.a}, {"b", cfg.phi.b}, {"c", cfg.phi.c}}},
      {"seed", cfg.seed},
      {"prob_scale", cfg.prob_scale},
      {"max_oracle_calls", cfg.max_oracle_calls},
  };
}

json to_json(const RunReport& report, bool with_timing) {
  json j{
      {"hitting_set", report.hitting_set},
      {"size", report.hitting_set.size()},
      {"oracle_calls", report.oracle_calls},
      {"initial_sample_size", report.initial_sample_size},
      {"added_per_call", report.added_per_call},
      {"rng_seed", report.rng_seed},
  };
  if (with_timing) {
    j["wall_ms"] =
        std::chrono::duration<double, std::milli>(report.wall_time).count();
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hitset
