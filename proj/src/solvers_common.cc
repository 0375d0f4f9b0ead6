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
#include <string>

#include "csg/connected_subsets.h"
#include "csg/solvers.h"
#include "solver_util.h"

namespace csg {

SolverStats& SolverStats::operator+=(const SolverStats& other) {
  subsets_enumerated += other.subsets_enumerated;
  dp_entries += other.dp_entries;
  nodes_expanded += other.nodes_expanded;
  nodes_pruned += other.nodes_pruned;
  structures_visited += other.structures_visited;
  shortcuts_applied += other.shortcuts_applied;
  guard_fallbacks += other.guard_fallbacks;
  dp_levels_completed += other.dp_levels_completed;
  search_stages_completed += other.search_stages_completed;
  frontiers_crossed = frontiers_crossed || other.frontiers_crossed;
  return *this;
}

std::vector<AgentSet> connected_subsets(const Graph& g,
                                        const SubsetQuery& query) {
  std::vector<AgentSet> out;
  for_each_connected_subset(g, query, [&](AgentSet s) { out.push_back(s); });
  return out;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kOracle: return "oracle";
    case Algorithm::kDype: return "dype";
    case Algorithm::kTsp: return "tsp";
    case Algorithm::kDypeStar: return "dype-star";
    case Algorithm::kDtsp: return "d-tsp";
    case Algorithm::kCfss: return "cfss";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kOracle, Algorithm::kDype, Algorithm::kTsp,
                      Algorithm::kDypeStar, Algorithm::kDtsp,
                      Algorithm::kCfss}) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

bool is_anytime(Algorithm algorithm) {
  return algorithm == Algorithm::kDypeStar || algorithm == Algorithm::kDtsp ||
         algorithm == Algorithm::kCfss;
}

std::string_view to_string(DtspMode mode) {
  return mode == DtspMode::kInterleaved ? "interleaved" : "parallel";
}

DtspMode parse_dtsp_mode(std::string_view name) {
  if (name == "interleaved") return DtspMode::kInterleaved;
  if (name == "parallel") return DtspMode::kParallel;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

namespace {

void cover_rest(const Graph& g, AgentSet rest, Partition& partial,
                const std::function<void(const Partition&)>& fn,
                std::uint64_t& count) {
  if (rest.empty()) {
    ++count;
    fn(partial);
    return;
  }
  const SubsetQuery query{rest, AgentSet::single(rest.lowest()), {}};
  for_each_connected_subset(g, query, [&](AgentSet block) {
    partial.blocks.push_back(block);
    cover_rest(g, rest - block, partial, fn, count);
    partial.blocks.pop_back();
  });
}

}  // namespace

std::uint64_t for_each_feasible_structure(
    const Graph& g, const std::function<void(const Partition&)>& fn) {
  Partition partial;
  std::uint64_t count = 0;
  cover_rest(g, g.agents(), partial, fn, count);
  return count;
}

std::vector<Partition> enumerate_feasible_structures(const Graph& g) {
  std::vector<Partition> out;
  for_each_feasible_structure(g, [&](const Partition& p) { out.push_back(p); });
  return out;
}

SolverResult brute_force_best(const Game& game, const Graph& g,
                              int max_agents) {
  internal::check_inputs(game, g);
  if (g.num_agents() > max_agents) {
    throw std::invalid_argument("oracle is capped at " +
                                std::to_string(max_agents) + " agents");
  }
  SolverResult result;
  result.stats.structures_visited =
      for_each_feasible_structure(g, [&](const Partition& p) {
        const Value v = partition_value(game, p);
        if (result.best_value < v) {
          result.best_value = v;
          result.best = p;
        }
      });
  result.best = result.best.canonical();
  return result;
}

std::optional<Value> table_completion(const DpTable& table, const Graph& g,
                                      AgentSet remainder) {
  Value total = 0;
  for (AgentSet t : connected_components(g, remainder)) {
    const DpEntry* entry = table.find(t);
    if (entry == nullptr) return std::nullopt;
    total += entry->best_value;
  }
  return total;
}

StarStep tsp_star_step(const DpTable& table, const Game& game, const Graph& g,
                       const Partition& partial, Partition& incumbent,
                       Value& incumbent_value) {
  const AgentSet remainder = g.agents() - partial.covered();
  const auto completion = table_completion(table, g, remainder);
  if (!completion) return StarStep::kGuardFailed;
  const Value total = partition_value(game, partial) + *completion;
  if (!(incumbent_value < total)) return StarStep::kNotBetter;
  Partition next =
      reconstruct(table, g, Partition{connected_components(g, remainder)});
  next.blocks.insert(next.blocks.end(), partial.blocks.begin(),
                     partial.blocks.end());
  incumbent = next.canonical();
  incumbent_value = total;
  return StarStep::kImproved;
}

namespace internal {

void check_inputs(const Game& game, const Graph& g) {
  if (game.num_agents() != g.num_agents()) {
    throw std::invalid_argument("game and graph disagree on the agent count");
  }
  if (!is_connected(g, g.agents())) {
    throw std::invalid_argument(
        "solver needs a connected graph; decompose it first");
  }
}

void check_inputs(const Game& game, const Graph& g, const Pseudotree& pt) {
  check_inputs(game, g);
  if (pt.num_agents() != g.num_agents()) {
    throw std::invalid_argument(
        "pseudotree and graph disagree on the agent count");
  }
}

Value split_value(const Game& game, const Graph& g, const DpTable& table,
                  AgentSet c, AgentSet s) {
  Value total = game.value(s);
  for (AgentSet t : connected_components(g, c - s)) {
    const DpEntry* entry = table.find(t);
    if (entry == nullptr) {
      std::ostringstream msg;
      msg << "dp lookup for " << t << " failed while splitting " << c;
      throw std::logic_error(msg.str());
    }
    total += entry->best_value;
  }
  return total;
}

bool solve_dp_level(const Game& game, const Graph& g, const Pseudotree& pt,
                    int level, DpTable& table, SolverStats& stats,
                    const std::function<bool()>& stop) {
  const AgentSet all = g.agents();
  const AgentSet anchor = AgentSet::single(pt.at(level));
  const SubsetQuery subproblems{pt.suffix_from(level), anchor, {}};
  return for_each_connected_subset(g, subproblems, [&](AgentSet c) {
    ++stats.subsets_enumerated;
    if (stop && stop()) return false;
    if (!is_connected(g, all - c)) return true;
    DpEntry entry;
    for_each_connected_subset(g, SubsetQuery{c, anchor, {}}, [&](AgentSet s) {
      ++stats.subsets_enumerated;
      const Value v = split_value(game, g, table, c, s);
      if (entry.best_value < v) entry = {v, s};
    });
    table.insert(c, entry);
    ++stats.dp_entries;
    return true;
  });
}

bool scan_dp_stage(const Game& game, const Graph& g, const Pseudotree& pt,
                   int level, const DpTable& table, Incumbent& incumbent,
                   DpEntry& best, SolverStats& stats,
                   const std::function<bool()>& stop) {
  const AgentSet all = g.agents();
  const SubsetQuery stage{all.without(pt.at(level)), pt.prefix_before(level),
                          {}};
  return for_each_connected_subset(g, stage, [&](AgentSet s) {
    ++stats.subsets_enumerated;
    if (stop && stop()) return false;
    const Value v = split_value(game, g, table, all, s);
    if (best.best_value < v) {
      best = {v, s};
      incumbent.offer(v, [&] {
        Partition p =
            reconstruct(table, g, Partition{connected_components(g, all - s)});
        p.blocks.push_back(s);
        return p;
      });
    }
    return true;
  });
}

}  // namespace internal
}  // namespace csg
