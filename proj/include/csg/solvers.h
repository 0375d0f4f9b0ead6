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

// Exact solvers for coalition structure generation on graphs: find the
// maximum-value partition of the agents into blocks that each induce a
// connected subgraph.
//
// All solvers below require a connected graph and throw
// std::invalid_argument otherwise, or when the game, graph and pseudotree
// disagree on the agent count. Equal-valued incumbents are never replaced, so
// every run is deterministic (except d_tsp in parallel mode, whose value is
// still exact).

#ifndef CSG_SOLVERS_H_
#define CSG_SOLVERS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "csg/bounds.h"
#include "csg/dp_table.h"
#include "csg/game.h"
#include "csg/graph.h"
#include "csg/partition.h"
#include "csg/pseudotree.h"
#include "csg/solver_result.h"

namespace csg {

enum class Algorithm { kOracle, kDype, kTsp, kDypeStar, kDtsp, kCfss };

std::string_view to_string(Algorithm algorithm);
// Accepts oracle, dype, tsp, dype-star, d-tsp, cfss.
Algorithm parse_algorithm(std::string_view name);
// Solvers that keep a feasible incumbent while running.
bool is_anytime(Algorithm algorithm);

// Every partition of the agents into connected blocks, exactly once. Built by
// repeatedly choosing the connected block that holds the lowest uncovered
// agent. Returns the number of structures.
std::uint64_t for_each_feasible_structure(
    const Graph& g, const std::function<void(const Partition&)>& fn);
std::vector<Partition> enumerate_feasible_structures(const Graph& g);

inline constexpr int kDefaultOracleCap = 12;

// Exhaustive scan; first-found tie kept. Throws std::invalid_argument above
// `max_agents`.
SolverResult brute_force_best(const Game& game, const Graph& g,
                              int max_agents = kDefaultOracleCap);

// Pseudotree dynamic programming. The DP sweep runs from b_n down to b_2,
// solving every connected C ⊆ {b_k..b_n} with b_k ∈ C and A∖C connected; a
// final pass anchored at b_1 solves A. Not anytime: the incumbent only exists
// once the run completes.
SolverResult dype(const Game& game, const Graph& g, const Pseudotree& pt,
                  const SolveOptions& options = {});

// Depth-first search over the pseudotree order with branch and bound. The
// incumbent starts at the better of {A} and all singletons; stage k seeds
// every connected C with {b_1..b_{k-1}} ⊆ C ⊆ A∖{b_k}, then grows the
// partial partition by connected blocks holding its first uncovered agent.
SolverResult tsp(const Game& game, const Graph& g, const Pseudotree& pt,
                 const TspBound& bound, const SolveOptions& options = {});

// Anytime DP: after each level k it scores every structure whose b_1 block
// holds {b_1..b_{k-1}} but not b_k. Starts from {A}.
SolverResult dype_star(const Game& game, const Graph& g, const Pseudotree& pt,
                       const SolveOptions& options = {});

enum class DtspMode { kInterleaved, kParallel };

std::string_view to_string(DtspMode mode);
DtspMode parse_dtsp_mode(std::string_view name);

struct DtspOptions {
  DtspMode mode = DtspMode::kInterleaved;
  BoundKind bound = BoundKind::kNone;
  // Disabling one worker turns it into a zero-speed worker; the other one
  // then covers the whole space.
  bool run_dp_worker = true;
  bool run_search_worker = true;
  // Interleaved mode only: pick the next worker at random instead of
  // alternating.
  std::optional<std::uint64_t> schedule_seed;
};

// Hybrid: the anytime DP sweeps levels downward from b_n while the search
// sweeps stages upward from b_2, sharing the DP table and the incumbent. The
// search closes a node straight from the table once every component of its
// remainder has been published. Stops once the frontiers cross.
SolverResult d_tsp(const Game& game, const Graph& g, const Pseudotree& pt,
                   const DtspOptions& dtsp = {},
                   const SolveOptions& options = {});

// Edge-contraction search over the coalition-structure lattice with dashed
// edges marking forbidden merges.
SolverResult cfss(const Game& game, const Graph& g, const CfssBound& bound,
                  const SolveOptions& options = {});

// ---------------------------------------------------------------------------
// Table shortcut used by the hybrid search.

// sum of v*(T) over the components T of `remainder`, or nullopt when one of
// them has no entry yet.
std::optional<Value> table_completion(const DpTable& table, const Graph& g,
                                      AgentSet remainder);

enum class StarStep { kGuardFailed, kNotBetter, kImproved };

// Completes `partial` optimally from the table. When V(partial) plus the
// completion beats `incumbent_value`, replaces the incumbent with partial ∪
// opt(remainder). kGuardFailed leaves everything untouched; the caller then
// searches the node explicitly.
StarStep tsp_star_step(const DpTable& table, const Game& game, const Graph& g,
                       const Partition& partial, Partition& incumbent,
                       Value& incumbent_value);

// The edge-contraction search state: current coalitions plus the dashed
// relation between adjacent ones. Coalitions are kept sorted by lowest agent,
// and an edge is a pair of coalition indices (i < j).
class ContractedState {
 public:
  // All singletons, every edge solid.
  static ContractedState root(const Graph& g);

  const std::vector<AgentSet>& blocks() const { return blocks_; }
  Partition partition() const { return Partition{blocks_}; }

  // Adjacent pairs, lexicographic by (lower index, higher index).
  std::vector<std::pair<int, int>> solid_edges() const;
  std::vector<std::pair<int, int>> dashed_edges() const;
  bool is_dashed(int i, int j) const {
    return dashed_with_[i].intersects(blocks_[j]);
  }

  // Joins blocks along solid edges, ignoring dashed ones.
  std::vector<AgentSet> merged() const;

  // Child i contracts solid edge e_i after marking e_1..e_{i-1} dashed. An
  // edge formed by a merge is dashed if any edge it absorbed was dashed.
  std::vector<ContractedState> children() const;

 private:
  explicit ContractedState(const Graph& g) : g_(&g) {}
  bool adjacent(int i, int j) const;
  void mark_dashed(int i, int j);
  ContractedState contracted(int i, int j) const;

  const Graph* g_;
  std::vector<AgentSet> blocks_;
  // For each block, the union of the blocks it has a dashed edge to.
  std::vector<AgentSet> dashed_with_;
};

}  // namespace csg

#endif  // CSG_SOLVERS_H_
