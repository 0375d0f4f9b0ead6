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

#include "csg/partition.h"

#include <algorithm>
#include <ostream>

namespace csg {

AgentSet Partition::covered() const {
  AgentSet all;
  for (AgentSet b : blocks) all |= b;
  return all;
}

bool Partition::disjoint() const {
  AgentSet seen;
  for (AgentSet b : blocks) {
    if (b.empty() || seen.intersects(b)) return false;
    seen |= b;
  }
  return true;
}

Partition Partition::canonical() const {
  Partition out{blocks};
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](AgentSet a, AgentSet b) { return a.lowest() < b.lowest(); });
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '{';
  bool first = true;
  for (AgentSet b : p.canonical().blocks) {
    if (!first) os << ' ';
    os << b;
    first = false;
  }
  return os << '}';
}

Value partition_value(const Game& game, const Partition& p) {
  Value total = 0;
  for (AgentSet b : p.blocks) total += game.value(b);
  return total;
}

bool is_coalition_structure(const Partition& p, AgentSet agents) {
  return p.disjoint() && p.covered() == agents;
}

bool is_feasible(const Graph& g, const Partition& p) {
  return std::all_of(p.blocks.begin(), p.blocks.end(),
                     [&](AgentSet b) { return is_connected(g, b); });
}

Partition singletons(AgentSet agents) {
  Partition p;
  for (Agent a : agents) p.blocks.push_back(AgentSet::single(a));
  return p;
}

}  // namespace csg
