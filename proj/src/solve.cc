// Copyright 2026 The csg Authors
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

#include <sstream>
#include <stdexcept>

#include "csg/harness.h"

namespace csg {

std::string Variant::name() const {
  std::string out(to_string(algorithm));
  switch (algorithm) {
    case Algorithm::kTsp:
      out += ":";
      out += to_string(bound);
      break;
    case Algorithm::kDtsp:
      out += ":";
      out += to_string(mode);
      if (bound != BoundKind::kNone) {
        out += ":";
        out += to_string(bound);
      }
      break;
    case Algorithm::kCfss:
      if (bound != BoundKind::kNone) {
        out += ":";
        out += to_string(bound);
      }
      break;
    default:
      break;
  }
  return out;
}

Variant parse_variant(std::string_view name) {
  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t colon = name.find(':');
    parts.push_back(name.substr(0, colon));
    if (colon == std::string_view::npos) break;
    name.remove_prefix(colon + 1);
  }
  Variant v;
  v.algorithm = parse_algorithm(parts[0]);
  const auto bad = [&] {
    return std::invalid_argument("bad variant qualifier for " +
                                 std::string(parts[0]));
  };
  switch (v.algorithm) {
    case Algorithm::kTsp:
    case Algorithm::kCfss:
      if (parts.size() > 2) throw bad();
      if (parts.size() == 2) v.bound = parse_bound_kind(parts[1]);
      break;
    case Algorithm::kDtsp:
      if (parts.size() > 3) throw bad();
      if (parts.size() >= 2) v.mode = parse_dtsp_mode(parts[1]);
      if (parts.size() == 3) v.bound = parse_bound_kind(parts[2]);
      break;
    default:
      if (parts.size() != 1) throw bad();
  }
  return v;
}

std::vector<Variant> default_variants() {
  return {
      {Algorithm::kDype},
      {Algorithm::kTsp, BoundKind::kNone},
      {Algorithm::kTsp, BoundKind::kSuperSub},
      {Algorithm::kDypeStar},
      {Algorithm::kDtsp, BoundKind::kNone, DtspMode::kInterleaved},
      {Algorithm::kDtsp, BoundKind::kNone, DtspMode::kParallel},
      {Algorithm::kCfss},
  };
}

SolverResult run_variant(const Game& game, const Graph& g,
                         std::optional<Agent> root,
                         const SolveRequest& request) {
  SolveOptions options;
  options.deadline = request.deadline;
  options.on_incumbent = request.on_incumbent;
  options.keep_table = request.keep_table;
  const Variant& v = request.variant;
  if (v.algorithm == Algorithm::kOracle) return brute_force_best(game, g);
  if (v.algorithm == Algorithm::kCfss) {
    return cfss(game, g, make_cfss_bound(game, v.bound), options);
  }
  const Pseudotree pt = build_pseudotree(g, root.value_or(0));
  switch (v.algorithm) {
    case Algorithm::kDype:
      return dype(game, g, pt, options);
    case Algorithm::kTsp: {
      TspBound bound = make_tsp_bound(game, v.bound);
      if (request.flip_bound_sign) {
        bound = [inner = std::move(bound)](Value partial, AgentSet rest) {
          return -inner(partial, rest);
        };
      }
      return tsp(game, g, pt, bound, options);
    }
    case Algorithm::kDypeStar:
      return dype_star(game, g, pt, options);
    case Algorithm::kDtsp: {
      DtspOptions dtsp;
      dtsp.mode = v.mode;
      dtsp.bound = v.bound;
      dtsp.schedule_seed = request.schedule_seed;
      return d_tsp(game, g, pt, dtsp, options);
    }
    default:
      throw std::logic_error("unhandled algorithm");
  }
}

namespace {

Partition lift(const Partition& p, AgentSet component) {
  std::vector<Agent> labels;
  for (Agent a : component) labels.push_back(a);
  Partition out;
  for (AgentSet block : p.blocks) {
    AgentSet lifted;
    for (Agent a : block) lifted = lifted.with(labels[a]);
    out.blocks.push_back(lifted);
  }
  return out;
}

}  // namespace

SolverResult solve_instance(const Instance& instance,
                            const SolveRequest& request) {
  const Graph g = instance.graph();
  const Game game = instance.make_game();
  const std::vector<AgentSet> components =
      connected_components(g, g.agents());
  if (components.size() <= 1) {
    return run_variant(game, g, instance.root, request);
  }

  const auto start = Clock::now();
  std::vector<Value> component_value;
  for (AgentSet c : components) component_value.push_back(game.value(c));

  SolverResult merged;
  merged.best_value = 0;
  bool have_best = true;
  Value done = 0;  // optimum of the finished components
  Value best_reported = kMinusInfinity;
  Partition done_structure;

  for (std::size_t i = 0; i < components.size(); ++i) {
    const AgentSet c = components[i];
    Value rest = 0;
    Partition rest_structure;
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      rest += component_value[j];
      rest_structure.blocks.push_back(components[j]);
    }

    SolveRequest sub = request;
    sub.keep_table = false;
    sub.on_incumbent = [&, c, rest](std::chrono::microseconds, Value value,
                                     const Partition& p) {
      const Value total = done + std::max(value, component_value[i]) + rest;
      if (!(best_reported < total)) return;
      best_reported = total;
      const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
          Clock::now() - start);
      merged.trace.push_back({elapsed, total});
      if (request.on_incumbent) {
        Partition whole = done_structure;
        if (value >= component_value[i]) {
          for (AgentSet b : lift(p, c).blocks) whole.blocks.push_back(b);
        } else {
          whole.blocks.push_back(c);
        }
        for (AgentSet b : rest_structure.blocks) whole.blocks.push_back(b);
        request.on_incumbent(elapsed, total, whole.canonical());
      }
    };

    std::optional<Agent> root;
    if (instance.root && c.contains(*instance.root)) {
      root = (c & AgentSet::first(*instance.root)).size();
    }
    const SolverResult r =
        run_variant(game.restricted_to(c), g.induced(c), root, sub);

    merged.stats += r.stats;
    merged.stats.frontiers_crossed =
        (i == 0 || merged.stats.frontiers_crossed) && r.stats.frontiers_crossed;
    merged.complete = merged.complete && r.complete;
    if (r.best.blocks.empty()) {
      have_best = false;
    } else {
      merged.best_value += r.best_value;
      for (AgentSet b : lift(r.best, c).blocks) {
        merged.best.blocks.push_back(b);
        done_structure.blocks.push_back(b);
      }
    }
    done += r.best.blocks.empty() ? component_value[i] : r.best_value;
    if (r.best.blocks.empty()) done_structure.blocks.push_back(c);
  }

  if (!have_best) {
    merged.best = Partition{};
    merged.best_value = kMinusInfinity;
  } else {
    merged.best = merged.best.canonical();
  }
  return merged;
}

std::string format_structure(const Partition& p) {
  std::ostringstream out;
  bool first = true;
  for (AgentSet b : p.canonical().blocks) {
    if (!first) out << ' ';
    out << b;
    first = false;
  }
  return out.str();
}

}  // namespace csg
