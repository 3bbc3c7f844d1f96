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

#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hitset/baselines.hpp"
#include "hitset/core.hpp"
#include "hitset/error.hpp"
#include "hitset/geom.hpp"
#include "hitset/io.hpp"
#include "hitset/lp.hpp"
#include "hitset/netfinder.hpp"
#include "hitset/packing.hpp"
#include "hitset/rng.hpp"

namespace hitset::cli {

using nlohmann::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HITSET_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("HITSET_SEED is not an unsigned integer");
    }
  }
  return 0;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return Rng(seed).split(trial).next_u64();
}

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads. Results must be
// written by index so output order does not depend on scheduling.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += jobs) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

SccFamily parse_phi(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("--phi expects a,b,c numbers, got '" + text + "'");
    }
  }
  if (parts.size() != 3) {
    throw std::invalid_argument("--phi expects three values a,b,c");
  }
  return {parts[0], parts[1], parts[2]};
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto s = std::stoull(text);
      return {s, s};
    }
    const auto lo = std::stoull(text.substr(0, dots));
    const auto hi = std::stoull(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("--seeds expects N or LO..HI, got '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string format_number(double x, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

json summarize(std::vector<double> values) {
  if (values.empty()) return json{{"mean", 0}, {"median", 0}, {"max", 0}};
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  double sum = 0;
  for (double v : values) sum += v;
  const double median =
      n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return json{{"mean", sum / static_cast<double>(n)},
              {"median", median},
              {"max", values.back()}};
}

// Resolves the VC bound: explicit flag, known shape class, or exact search.
std::size_t resolve_d(const Instance& instance, std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (instance.shape_class) {
    const std::size_t known = vc_bound(*instance.shape_class);
    if (known > 0) return known;
  }
  const SetSystem& system = instance.system;
  const auto vc = vc_dimension_exact(
      system, system.num_points() > kVcExhaustiveLimit
                  ? std::optional<std::size_t>(8)
                  : std::nullopt);
  if (!vc.exact) {
    throw std::invalid_argument("VC dimension exceeds the search cap; pass --d");
  }
  return std::max<std::size_t>(1, vc.value);
}

SccFamily resolve_phi(const Instance& instance, const std::optional<std::string>& flag,
                      std::size_t d) {
  if (flag) return parse_phi(*flag);
  return scc_family(instance.shape_class.value_or(ShapeClass::kRandom), d);
}

// Shared netfinder flags.
struct NetfinderFlags {
  double beta = 0.75;
  double gamma = 0.01;
  std::optional<std::size_t> d;
  std::optional<std::string> phi;
  double prob_scale = 1.0;
  std::size_t max_oracle_calls = 0;

  void add_to(CLI::App* app) {
    app->add_option("--beta", beta, "Initial-sample constant beta")->capture_default_str();
    app->add_option("--gamma", gamma, "Resampling constant gamma")->capture_default_str();
    app->add_option("--d", d, "VC-dimension bound (default: from shape class or exact)");
    app->add_option("--phi", phi, "Cell complexity family a,b,c for c*l^a*k^b");
    app->add_option("--prob-scale", prob_scale, "Multiplier on both sampling rates")
        ->capture_default_str();
    app->add_option("--max-oracle-calls", max_oracle_calls,
                    "Oracle call cap (0: 10*ceil(2076*z*) at defaults)")
        ->capture_default_str();
  }

  AlgoConfig resolve(const Instance& instance, std::uint64_t seed) const {
    AlgoConfig cfg;
    cfg.beta = beta;
    cfg.gamma = gamma;
    cfg.d = resolve_d(instance, d);
    cfg.phi = resolve_phi(instance, phi, cfg.d);
    cfg.seed = seed;
    cfg.prob_scale = prob_scale;
    cfg.max_oracle_calls = max_oracle_calls;
    cfg.validate();
    return cfg;
  }
};

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : fallback_(fallback), path_(path) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write '" + path_ + "'");
    file << text;
  }

 private:
  std::ostream& fallback_;
  std::string path_;
};

json instance_summary(const Instance& instance) {
  json j{{"m", instance.system.num_points()},
         {"n", instance.system.num_ranges()},
         {"nnz", instance.system.nnz()}};
  if (instance.shape_class) j["class"] = std::string(to_string(*instance.shape_class));
  return j;
}

WeightVector resolve_weights(const Instance& instance, const std::string& mode) {
  if (mode == "uniform") return WeightVector::uniform(instance.system.num_points());
  if (mode == "lp") return solve_lp(instance.system).mu_star;
  if (mode == "instance") {
    if (instance.weights) return *instance.weights;
    return WeightVector::uniform(instance.system.num_points());
  }
  throw std::invalid_argument("--weights must be uniform, lp or instance");
}

// ---- gen ----------------------------------------------------------------

struct GenOptions {
  std::string shape_class;
  std::size_t m = 100;
  std::size_t n = 80;
  std::optional<std::uint64_t> seed;
  GenParams params;
  std::string output;
};

void add_gen(CLI::App& app, GenOptions& o, std::function<void()>& action,
             std::ostream& out) {
  CLI::App* cmd = app.add_subcommand("gen", "Generate a geometric instance");
  cmd->add_option("--class", o.shape_class, "discs|rects|halfplanes|intervals|random")
      ->required();
  cmd->add_option("--m", o.m, "Number of points")->capture_default_str();
  cmd->add_option("--n", o.n, "Number of ranges")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Generator seed");
  cmd->add_option("--r-min", o.params.disc_radius_min)->capture_default_str();
  cmd->add_option("--r-max", o.params.disc_radius_max)->capture_default_str();
  cmd->add_option("--side-min", o.params.rect_side_min)->capture_default_str();
  cmd->add_option("--side-max", o.params.rect_side_max)->capture_default_str();
  cmd->add_option("--len-min", o.params.interval_length_min)->capture_default_str();
  cmd->add_option("--len-max", o.params.interval_length_max)->capture_default_str();
  cmd->add_option("--density", o.params.density)->capture_default_str();
  cmd->add_option("--retry-cap", o.params.retry_cap)->capture_default_str();
  cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  cmd->callback([&] {
    action = [&] {
      const auto cls = parse_shape_class(o.shape_class);
      const auto geometry =
          gen_instance(cls, o.m, o.n, o.seed.value_or(default_seed()), o.params);
      Output(out, o.output).write(dump(to_json(make_instance(geometry))));
    };
  });
}

// ---- solve --------------------------------------------------------------

struct SolveOptions {
  std::string instance;
  std::string algo = "netfinder";
  NetfinderFlags flags;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  std::size_t jobs = 1;
  std::size_t exact_cap = 64;
  bool timing = false;
  std::string output;
};

json run_solve(const SolveOptions& o) {
  const Instance instance = read_instance_file(o.instance);
  const SetSystem& system = instance.system;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  };

  if (o.algo == "lp") {
    json j = to_json(solve_lp(system));
    if (o.timing) j["wall_ms"] = elapsed_ms();
    return j;
  }

  json report{{"command", "solve"}, {"algo", o.algo},
              {"instance", instance_summary(instance)}};
  if (o.algo == "greedy" || o.algo == "exact") {
    PointSet h;
    if (o.algo == "greedy") {
      h = greedy_hitting_set(system);
    } else {
      auto exact = exact_hitting_set(system, o.exact_cap);
      if (!exact) {
        throw CapExceededError("optimum is unknown: at least " +
                               std::to_string(o.exact_cap + 1) + " points");
      }
      h = std::move(*exact);
      report["status"] = "optimal";
      report["config"] = json{{"exact_cap", o.exact_cap}};
    }
    report["hitting_set"] = h;
    report["size"] = h.size();
    report["valid"] = is_hitting_set(system, h);
    if (o.timing) report["wall_ms"] = elapsed_ms();
    return report;
  }
  if (o.algo != "netfinder") {
    throw std::invalid_argument("--algo must be netfinder, greedy, exact or lp");
  }
  if (o.trials == 0) throw std::invalid_argument("--trials must be positive");

  const std::uint64_t seed = o.seed.value_or(default_seed());
  const AlgoConfig base = o.flags.resolve(instance, seed);
  const LpSolution lp = solve_lp(system);

  std::vector<RunReport> runs(o.trials);
  parallel_for(o.trials, o.jobs, [&](std::size_t i) {
    AlgoConfig cfg = base;
    cfg.seed = trial_seed(seed, i);
    runs[i] = find_hitting_set(system, lp, cfg);
  });

  json config = to_json(base);
  config["trials"] = o.trials;
  config["effective_max_oracle_calls"] =
      base.max_oracle_calls ? base.max_oracle_calls
                            : default_max_oracle_calls(base, lp.z_star);
  config["initial_sample_factor"] = initial_sample_factor(lp, base);
  report["config"] = std::move(config);
  report["lp"] = json{{"z_star", lp.z_star}, {"eps_star", lp.eps_star}};

  json run_list = json::array();
  std::vector<double> sizes, calls;
  bool all_valid = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    json r = to_json(runs[i], o.timing);
    const bool valid = is_hitting_set(system, runs[i].hitting_set);
    all_valid = all_valid && valid;
    r["trial"] = i;
    r["valid"] = valid;
    run_list.push_back(std::move(r));
    sizes.push_back(static_cast<double>(runs[i].hitting_set.size()));
    calls.push_back(static_cast<double>(runs[i].oracle_calls));
  }
  report["runs"] = std::move(run_list);
  report["summary"] = json{{"trials", o.trials},
                           {"all_valid", all_valid},
                           {"size", summarize(sizes)},
                           {"oracle_calls", summarize(calls)}};
  if (o.timing) report["wall_ms"] = elapsed_ms();
  return report;
}

void add_solve(CLI::App& app, SolveOptions& o, std::function<void()>& action,
               std::ostream& out) {
  CLI::App* cmd = app.add_subcommand("solve", "Compute a hitting set");
  cmd->add_option("instance", o.instance, "Instance JSON")->required();
  cmd->add_option("--algo", o.algo, "netfinder|greedy|exact|lp")->capture_default_str();
  o.flags.add_to(cmd);
  cmd->add_option("--seed", o.seed, "Base seed (default $HITSET_SEED or 0)");
  cmd->add_option("--trials", o.trials, "Independent netfinder runs")->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  cmd->add_option("--exact-cap", o.exact_cap, "Largest size the exact search explores")
      ->capture_default_str();
  cmd->add_flag("--timing", o.timing, "Include wall-clock times");
  cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  cmd->callback([&] {
    action = [&] { Output(out, o.output).write(dump(run_solve(o))); };
  });
}

// ---- verify -------------------------------------------------------------

struct VerifyOptions {
  std::string lemma;
  std::string instance;
  double k = 1.0;
  double delta = 0.1;
  std::optional<std::size_t> d;
  std::optional<std::string> phi;
  std::optional<std::size_t> trials;
  std::size_t packings = 1;
  std::string weights = "instance";
  std::optional<std::uint64_t> seed;
  std::string output;
};

std::size_t packing_vc(const SetSystem& system, const Packing& packing) {
  const SetSystem sub = system.subsystem(packing.members);
  const auto vc = vc_dimension_exact(sub, std::max<std::size_t>(1, packing.members.size()));
  return std::max<std::size_t>(1, vc.value);
}

json run_verify(const VerifyOptions& o) {
  const Instance instance = read_instance_file(o.instance);
  const SetSystem& system = instance.system;
  const WeightVector w = resolve_weights(instance, o.weights);
  const std::uint64_t seed = o.seed.value_or(default_seed());
  json report{{"command", "verify"},
              {"lemma", o.lemma},
              {"instance", instance_summary(instance)},
              {"config", {{"k", o.k}, {"delta", o.delta}, {"weights", o.weights},
                          {"seed", seed}}}};
  Rng root(seed);

  if (o.lemma == "shallow") {
    const std::size_t trials = o.trials.value_or(100);
    const std::size_t d = resolve_d(instance, o.d);
    const SccFamily phi = resolve_phi(instance, o.phi, d);
    const double bound = shallow_packing_bound(d, o.delta, o.k, phi);
    std::vector<std::size_t> sizes;
    bool holds = true;
    for (std::size_t t = 0; t < trials; ++t) {
      const Packing p = greedy_maximal_packing(system, w, o.k, o.delta, trial_seed(seed, t));
      const bool valid = is_packing(system, w, p.members, o.k, o.delta).ok &&
                         is_maximal(system, w, p);
      holds = holds && valid && static_cast<double>(p.members.size()) <= bound;
      sizes.push_back(p.members.size());
    }
    report["config"]["d"] = d;
    report["config"]["phi"] = {{"a", phi.a}, {"b", phi.b}, {"c", phi.c}};
    report["config"]["trials"] = trials;
    report["bound"] = bound;
    report["packing_sizes"] = sizes;
    report["max_packing_size"] = *std::max_element(sizes.begin(), sizes.end());
    report["holds"] = holds;
    return report;
  }

  if (o.lemma == "packing") {
    const std::size_t trials = o.trials.value_or(10000);
    json results = json::array();
    bool holds = true;
    for (std::size_t t = 0; t < o.packings; ++t) {
      const Packing p = greedy_maximal_packing(system, w, o.k, o.delta, trial_seed(seed, t));
      const std::size_t d = o.d.value_or(packing_vc(system, p));
      const auto est = monte_carlo_packing_lemma(system, w, p.members, d, o.delta, trials,
                                                 trial_seed(seed + 1, t));
      holds = holds && est.holds();
      results.push_back({{"packing_size", est.packing_size},
                         {"d", d},
                         {"sample_size", est.sample_size},
                         {"mean_projection", est.mean_projection},
                         {"std_error", est.std_error},
                         {"holds", est.holds()}});
    }
    report["config"]["trials"] = trials;
    report["config"]["packings"] = o.packings;
    report["results"] = std::move(results);
    report["holds"] = holds;
    return report;
  }

  if (o.lemma == "edges") {
    const std::size_t trials = o.trials.value_or(500);
    const std::size_t m = system.num_points();
    std::size_t violations = 0;
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = root.split(t);
      PointSet y;
      for (PointIndex j = 0; j < m; ++j) {
        if (rng.bernoulli(0.5)) y.push_back(j);
      }
      const Projection proj = project(system, y);
      const auto graph = build_unit_distance_graph(proj);
      const std::size_t d =
          o.d.value_or(vc_dimension_exact(proj.as_system(m), y.size()).value);
      if (!check_edge_bound(graph, d)) ++violations;
      if (d > 0 && graph.num_vertices() > 0) {
        worst = std::max(worst, static_cast<double>(graph.num_edges()) /
                                    static_cast<double>(d * graph.num_vertices()));
      }
    }
    report["config"]["trials"] = trials;
    report["graphs"] = trials;
    report["violations"] = violations;
    report["max_edge_ratio"] = worst;
    report["holds"] = violations == 0;
    return report;
  }

  if (o.lemma == "weight") {
    const std::size_t trials = o.trials.value_or(500);
    std::size_t violations = 0;
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Packing p = greedy_maximal_packing(system, w, o.k, o.delta, trial_seed(seed, t));
      const std::size_t d = o.d.value_or(packing_vc(system, p));
      Rng rng = root.split(t);
      const PointSet y = WeightedSampler(w).distinct_sample(
          packing_sample_size(d, o.delta), rng);
      const auto graph =
          build_unit_distance_graph(project(system.subsystem(p.members), y));
      if (!check_total_weight_bound(graph, d, p.members.size())) ++violations;
      worst = std::max(worst, static_cast<double>(graph.total_weight) /
                                  static_cast<double>(2 * d * p.members.size()));
    }
    report["config"]["trials"] = trials;
    report["pairs"] = trials;
    report["violations"] = violations;
    report["max_weight_ratio"] = worst;
    report["holds"] = violations == 0;
    return report;
  }

  throw std::invalid_argument("--lemma must be shallow, packing, edges or weight");
}

void add_verify(CLI::App& app, VerifyOptions& o, std::function<void()>& action,
                std::ostream& out) {
  CLI::App* cmd = app.add_subcommand("verify", "Check a packing inequality empirically");
  cmd->add_option("--lemma", o.lemma, "shallow|packing|edges|weight")->required();
  cmd->add_option("instance", o.instance, "Instance JSON")->required();
  cmd->add_option("--k", o.k, "Weight cap k")->capture_default_str();
  cmd->add_option("--delta", o.delta, "Separation delta")->capture_default_str();
  cmd->add_option("--d", o.d, "VC-dimension bound (default: exact)");
  cmd->add_option("--phi", o.phi, "Cell complexity family a,b,c");
  cmd->add_option("--trials", o.trials, "Packings, graphs or Monte Carlo samples");
  cmd->add_option("--packings", o.packings, "Packings for --lemma packing")
      ->capture_default_str();
  cmd->add_option("--weights", o.weights, "uniform|lp|instance")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed (default $HITSET_SEED or 0)");
  cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  cmd->callback([&] {
    action = [&] { Output(out, o.output).write(dump(run_verify(o))); };
  });
}

// ---- stats --------------------------------------------------------------

struct StatsOptions {
  std::string instance;
  bool vcdim = false;
  std::optional<std::size_t> cap;
  std::optional<std::string> cells;
  std::size_t trials = 64;
  std::optional<std::uint64_t> seed;
  std::string output;
};

json run_stats(const StatsOptions& o) {
  const Instance instance = read_instance_file(o.instance);
  const SetSystem& system = instance.system;
  json report{{"command", "stats"}, {"instance", instance_summary(instance)}};
  if (o.vcdim) {
    const auto vc = vc_dimension_exact(system, o.cap);
    report["vc_dimension"] = {{"value", vc.value}, {"exact", vc.exact}};
    if (o.cap) report["vc_dimension"]["cap"] = *o.cap;
  }
  if (o.cells) {
    const auto parts = split_list(*o.cells);
    if (parts.size() != 2) throw std::invalid_argument("--cells expects l,k");
    const std::size_t l = std::stoul(parts[0]);
    const std::size_t k = std::stoul(parts[1]);
    const std::uint64_t seed = o.seed.value_or(default_seed());
    report["cells"] = {
        {"l", l},
        {"k", k},
        {"count", count_shallow_cells(system, nullptr, l, k, o.trials, seed)},
        {"exhaustive", system.num_points() <= kCellsExhaustiveLimit},
        {"trials", o.trials},
        {"seed", seed}};
  }
  return report;
}

void add_stats(CLI::App& app, StatsOptions& o, std::function<void()>& action,
               std::ostream& out) {
  CLI::App* cmd = app.add_subcommand("stats", "VC dimension and shallow cell counts");
  cmd->add_option("instance", o.instance, "Instance JSON")->required();
  cmd->add_flag("--vcdim", o.vcdim, "Compute the VC dimension");
  cmd->add_option("--cap", o.cap, "Largest VC dimension to search for");
  cmd->add_option("--cells", o.cells, "Count depth<=k cells on <=l columns: l,k");
  cmd->add_option("--trials", o.trials, "Random column orders when m > 12")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed (default $HITSET_SEED or 0)");
  cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  cmd->callback([&] {
    action = [&] { Output(out, o.output).write(dump(run_stats(o))); };
  });
}

// ---- bench --------------------------------------------------------------

struct BenchOptions {
  std::string instance;
  std::string shape_class;
  std::size_t m = 100;
  std::size_t n = 80;
  std::string algos = "netfinder,greedy,exact";
  std::string seeds = "1..100";
  NetfinderFlags flags;
  std::size_t exact_cap = 30;
  std::size_t exact_max_points = 30;
  std::size_t jobs = 1;
  bool timing = false;
  std::string output;
};

struct BenchRow {
  std::uint64_t seed;
  std::string algo;
  std::size_t size;
  std::size_t calls;
  double z_star;
  double wall_ms;
  std::optional<double> ratio;
};

std::string run_bench(const BenchOptions& o) {
  if (o.instance.empty() == o.shape_class.empty()) {
    throw std::invalid_argument("bench needs exactly one of an instance file or --class");
  }
  const auto [lo, hi] = parse_seed_range(o.seeds);
  const auto algos = split_list(o.algos);
  for (const auto& a : algos) {
    if (a != "netfinder" && a != "greedy" && a != "exact") {
      throw std::invalid_argument("bench --algo entries must be netfinder, greedy or exact");
    }
  }
  std::optional<Instance> fixed;
  if (!o.instance.empty()) fixed = read_instance_file(o.instance);

  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<BenchRow>> rows(count);
  parallel_for(count, o.jobs, [&](std::size_t i) {
    const std::uint64_t seed = lo + i;
    const Instance instance =
        fixed ? *fixed
              : make_instance(gen_instance(parse_shape_class(o.shape_class), o.m, o.n, seed));
    const SetSystem& system = instance.system;
    const LpSolution lp = solve_lp(system);
    std::optional<std::size_t> opt;
    if (system.num_points() <= o.exact_max_points) {
      if (auto exact = exact_hitting_set(system, o.exact_cap)) opt = exact->size();
    }
    auto ratio = [&](std::size_t size) -> std::optional<double> {
      if (!opt || *opt == 0) return std::nullopt;
      return static_cast<double>(size) / static_cast<double>(*opt);
    };
    for (const auto& algo : algos) {
      const auto start = std::chrono::steady_clock::now();
      BenchRow row{seed, algo, 0, 0, lp.z_star, 0.0, std::nullopt};
      if (algo == "netfinder") {
        const RunReport r = find_hitting_set(system, lp, o.flags.resolve(instance, seed));
        row.size = r.hitting_set.size();
        row.calls = r.oracle_calls;
      } else if (algo == "greedy") {
        row.size = greedy_hitting_set(system).size();
      } else {
        if (!opt) continue;
        row.size = *opt;
      }
      if (o.timing) {
        row.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      }
      row.ratio = ratio(row.size);
      rows[i].push_back(row);
    }
  });

  std::string csv = "seed,algo,|H|,T,z*,wall_ms,ratio\n";
  for (const auto& per_seed : rows) {
    for (const BenchRow& r : per_seed) {
      csv += std::to_string(r.seed) + "," + r.algo + "," + std::to_string(r.size) + "," +
             std::to_string(r.calls) + "," + format_number(r.z_star) + "," +
             format_number(r.wall_ms, "%.3f") + "," +
             (r.ratio ? format_number(*r.ratio, "%.6f") : std::string()) + "\n";
    }
  }
  return csv;
}

void add_bench(CLI::App& app, BenchOptions& o, std::function<void()>& action,
               std::ostream& out) {
  CLI::App* cmd = app.add_subcommand("bench", "Compare algorithms over a seed range (CSV)");
  cmd->add_option("instance", o.instance, "Instance JSON (or use --class)");
  cmd->add_option("--class", o.shape_class, "Generate one instance per seed");
  cmd->add_option("--m", o.m, "Points per generated instance")->capture_default_str();
  cmd->add_option("--n", o.n, "Ranges per generated instance")->capture_default_str();
  cmd->add_option("--algo", o.algos, "Comma-separated netfinder,greedy,exact")
      ->capture_default_str();
  cmd->add_option("--seeds", o.seeds, "Seed or LO..HI")->capture_default_str();
  o.flags.add_to(cmd);
  cmd->add_option("--exact-cap", o.exact_cap, "Size cap for the exact optimum")
      ->capture_default_str();
  cmd->add_option("--exact-max-points", o.exact_max_points,
                  "Skip the exact optimum above this many points")
      ->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  cmd->add_flag("--timing", o.timing, "Fill wall_ms (otherwise 0)");
  cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  cmd->callback([&] {
    action = [&] { Output(out, o.output).write(run_bench(o)); };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("LP-guided weighted epsilon-net hitting sets", "hitset");
  app.require_subcommand(1);

  std::function<void()> action;
  GenOptions gen;
  SolveOptions solve;
  VerifyOptions verify;
  StatsOptions stats;
  BenchOptions bench;
  add_gen(app, gen, action, out);
  add_solve(app, solve, action, out);
  add_verify(app, verify, action, out);
  add_stats(app, stats, action, out);
  add_bench(app, bench, action, out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRunError;
  }
}

}  // namespace hitset::cli
