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

#ifndef CSG_SOLVER_RESULT_H_
#define CSG_SOLVER_RESULT_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "csg/dp_table.h"
#include "csg/game.h"
#include "csg/partition.h"

namespace csg {

using Clock = std::chrono::steady_clock;

// Work counters. Not every solver touches every field.
struct SolverStats {
  std::uint64_t subsets_enumerated = 0;  // connected subsets produced
  std::uint64_t dp_entries = 0;          // subproblems solved
  std::uint64_t nodes_expanded = 0;      // search nodes generated
  std::uint64_t nodes_pruned = 0;        // subtrees cut by the bound
  std::uint64_t structures_visited = 0;  // complete structures evaluated
  std::uint64_t shortcuts_applied = 0;   // search nodes closed from the DP table
  std::uint64_t guard_fallbacks = 0;     // shortcut eligible but entries missing
  int dp_levels_completed = 0;
  int search_stages_completed = 0;
  bool frontiers_crossed = false;

  SolverStats& operator+=(const SolverStats& other);
};

struct TracePoint {
  std::chrono::microseconds elapsed;
  Value value;
};

struct SolverResult {
  Partition best;
  Value best_value = kMinusInfinity;
  SolverStats stats;
  // Incumbent history, one point per strict improvement.
  std::vector<TracePoint> trace;
  // False when a deadline stopped the run; best is then the incumbent at
  // cutoff (which may be empty for solvers without one).
  bool complete = true;
  // Filled by the DP-based solvers when SolveOptions::keep_table is set.
  std::shared_ptr<const DpTable> table;
};

using IncumbentCallback =
    std::function<void(std::chrono::microseconds, Value, const Partition&)>;
using StructureVisitor = std::function<void(const Partition&)>;

struct SolveOptions {
  std::optional<Clock::time_point> deadline;
  // Fires on every strict improvement of the incumbent.
  IncumbentCallback on_incumbent;
  // Fires for every complete structure a tree search evaluates (tsp, cfss).
  StructureVisitor on_structure;
  bool keep_table = false;
};

}  // namespace csg

#endif  // CSG_SOLVER_RESULT_H_
