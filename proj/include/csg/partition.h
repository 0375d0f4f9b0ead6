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

#ifndef CSG_PARTITION_H_
#define CSG_PARTITION_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "csg/agent_set.h"
#include "csg/game.h"
#include "csg/graph.h"

namespace csg {

// A collection of pairwise-disjoint nonempty coalitions. A partition that
// covers every agent is a coalition structure.
struct Partition {
  std::vector<AgentSet> blocks;

  AgentSet covered() const;
  bool disjoint() const;
  // Blocks sorted by lowest agent. Two partitions are the same set partition
  // iff their canonical forms compare equal.
  Partition canonical() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// V(P): sum of block values; the empty partition is worth 0.
Value partition_value(const Game& game, const Partition& p);

// Pairwise disjoint, nonempty blocks whose union is exactly `agents`.
bool is_coalition_structure(const Partition& p, AgentSet agents);

// Every block induces a connected subgraph.
bool is_feasible(const Graph& g, const Partition& p);

// {{a_0}, .., {a_{n-1}}} over `agents`.
Partition singletons(AgentSet agents);

}  // namespace csg

#endif  // CSG_PARTITION_H_
