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

#include <memory>

#include "csg/connected_subsets.h"
#include "csg/solvers.h"
#include "solver_util.h"

namespace csg {

SolverResult dype(const Game& game, const Graph& g, const Pseudotree& pt,
                  const SolveOptions& options) {
  internal::check_inputs(game, g, pt);
  const auto start = Clock::now();
  const int n = g.num_agents();
  const AgentSet all = g.agents();

  SolverResult result;
  internal::Incumbent incumbent(options, start);
  internal::Deadline deadline(options.deadline);
  const std::function<bool()> stop = [&] { return deadline.expired(); };
  auto table = std::make_shared<DpTable>(pt);

  for (int level = n; level >= 2; --level) {
    if (!internal::solve_dp_level(game, g, pt, level, *table, result.stats,
                                  stop)) {
      result.complete = false;
      break;
    }
    table->publish(level);
    ++result.stats.dp_levels_completed;
  }

  if (result.complete) {
    // Final pass over every connected S holding b_1.
    DpEntry root;
    const SubsetQuery anchored{all, AgentSet::single(pt.at(1)), {}};
    for_each_connected_subset(g, anchored, [&](AgentSet s) {
      ++result.stats.subsets_enumerated;
      const Value v = internal::split_value(game, g, *table, all, s);
      if (root.best_value < v) root = {v, s};
    });
    table->insert(all, root);
    table->publish(1);
    ++result.stats.dp_entries;
    incumbent.offer(root.best_value,
                    [&] { return reconstruct(*table, g, Partition{{all}}); });
  }

  incumbent.finish(result);
  if (options.keep_table) result.table = std::move(table);
  return result;
}

SolverResult dype_star(const Game& game, const Graph& g, const Pseudotree& pt,
                       const SolveOptions& options) {
  internal::check_inputs(game, g, pt);
  const auto start = Clock::now();
  const int n = g.num_agents();
  const AgentSet all = g.agents();

  SolverResult result;
  internal::Incumbent incumbent(options, start);
  internal::Deadline deadline(options.deadline);
  const std::function<bool()> stop = [&] { return deadline.expired(); };
  auto table = std::make_shared<DpTable>(pt);

  // v*(A) starts in sync with the initial incumbent {A}.
  DpEntry root{game.value(all), all};
  incumbent.offer(root.best_value, [&] { return Partition{{all}}; });

  for (int level = n; level >= 2; --level) {
    if (deadline.expired() ||
        !internal::solve_dp_level(game, g, pt, level, *table, result.stats,
                                  stop)) {
      result.complete = false;
      break;
    }
    table->publish(level);
    ++result.stats.dp_levels_completed;
    if (!internal::scan_dp_stage(game, g, pt, level, *table, incumbent, root,
                                 result.stats, stop)) {
      result.complete = false;
      break;
    }
  }
  if (result.complete) {
    table->insert(all, root);
    table->publish(1);
    ++result.stats.dp_entries;
  }

  incumbent.finish(result);
  if (options.keep_table) result.table = std::move(table);
  return result;
}

}  // namespace csg
