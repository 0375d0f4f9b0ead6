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

#include "csg/harness.h"

namespace csg {

std::string VerifyFailure::reproduce() const {
  std::ostringstream out;
  out << "csg gen --model " << model.name() << " --n " << num_agents
      << " --game " << to_string(game_kind) << " --seed " << seed
      << " | csg solve - --algorithm " << variant;
  return out.str();
}

namespace {

// Empty when the run checks out, otherwise the first problem found.
std::string check_run(const Variant& v, const Game& game, const Graph& g,
                      const SolverResult& r, Value optimum) {
  std::ostringstream why;
  if (!r.complete) return "run did not complete";
  if (r.best_value != optimum) {
    why << "value " << r.best_value << ", oracle " << optimum;
    return why.str();
  }
  if (!is_feasible(g, r.best)) {
    why << "infeasible structure " << r.best;
    return why.str();
  }
  if (partition_value(game, r.best) != r.best_value) {
    why << "structure " << r.best << " is worth "
        << partition_value(game, r.best) << ", reported " << r.best_value;
    return why.str();
  }
  if (is_anytime(v.algorithm)) {
    if (r.trace.empty()) return "empty trace";
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      if (r.trace[i].value < r.trace[i - 1].value) {
        return "trace decreases at point " + std::to_string(i);
      }
    }
    if (v.algorithm != Algorithm::kCfss &&
        r.trace.front().value != game.value(g.agents())) {
      why << "trace starts at " << r.trace.front().value << ", v(A) is "
          << game.value(g.agents());
      return why.str();
    }
    if (r.trace.back().value != optimum) {
      why << "trace ends at " << r.trace.back().value;
      return why.str();
    }
  }
  if (v.algorithm == Algorithm::kDtsp) {
    if (!r.stats.frontiers_crossed) return "frontiers never crossed";
    if (r.stats.guard_fallbacks != 0) {
      why << r.stats.guard_fallbacks << " guard fallbacks";
      return why.str();
    }
  }
  return {};
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config, std::ostream* log) {
  VerifyReport report;
  for (GameKind kind : config.game_kinds) {
    for (const GraphModel& model : config.models) {
      for (int n = config.min_agents; n <= config.max_agents; ++n) {
        for (int s = 0; s < config.seeds; ++s) {
          const std::uint64_t seed = config.first_seed + s;
          GameParams params;
          params.kind = kind;
          const Instance inst = gen_instance(model, n, params, seed);
          const Graph g = inst.graph();
          const Game game = inst.make_game();
          const Value optimum = brute_force_best(game, g).best_value;
          ++report.instances;

          for (const Variant& v : config.variants) {
            SolveRequest request;
            request.variant = v;
            request.keep_table = config.audit_tables &&
                                 (v.algorithm == Algorithm::kDype ||
                                  v.algorithm == Algorithm::kDypeStar);
            request.flip_bound_sign = config.flip_bound_sign;
            const SolverResult r = run_variant(game, g, inst.root, request);
            ++report.runs;
            report.guard_fallbacks += r.stats.guard_fallbacks;

            std::string detail = check_run(v, game, g, r, optimum);
            if (detail.empty() && request.keep_table) {
              ++report.audited_tables;
              const auto violations = audit_dp_table(game, g, *r.table);
              if (!violations.empty()) {
                detail = "table audit: " + violations.front();
              }
            }
            if (detail.empty()) continue;
            VerifyFailure f{model, n, kind, seed, v.name(), detail};
            if (log) {
              *log << "MISMATCH " << f.variant << " " << model.name()
                   << " n=" << n << " seed=" << seed << ": " << detail
                   << "\n  reproduce: " << f.reproduce() << "\n";
            }
            report.failures.push_back(std::move(f));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace csg
