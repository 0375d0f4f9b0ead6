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

#ifndef CSG_PSEUDOTREE_H_
#define CSG_PSEUDOTREE_H_

#include <optional>
#include <span>
#include <vector>

#include "csg/agent_set.h"
#include "csg/graph.h"

namespace csg {

// A rooted spanning tree over the agents in which every graph edge joins an
// ancestor and a descendant, together with its breadth-first agent order
// b_1..b_n. Positions are 1-based throughout, matching the sweep indices used
// by the solvers.
class Pseudotree {
 public:
  Agent root() const { return order_.front(); }
  int num_agents() const { return static_cast<int>(order_.size()); }

  std::optional<Agent> parent(Agent a) const;
  int depth(Agent a) const { return depth_[a]; }

  // b_1..b_n.
  std::span<const Agent> order() const { return order_; }
  // b_i, for 1 <= i <= n.
  Agent at(int position) const { return order_[position - 1]; }
  // i such that b_i == a. Throws std::out_of_range for an unknown agent.
  int position(Agent a) const;

  // {b_1, .., b_{i-1}}.
  AgentSet prefix_before(int position) const { return prefix_[position - 1]; }
  // {b_i, .., b_n}.
  AgentSet suffix_from(int position) const {
    return AgentSet::first(num_agents()) - prefix_[position - 1];
  }
  // Smallest position over the members of a nonempty set.
  int first_position(AgentSet s) const;
  // Member of `s` that comes first in the breadth-first order.
  Agent first_in_order(AgentSet s) const { return at(first_position(s)); }

  bool is_ancestor(Agent ancestor, Agent a) const;

 private:
  friend Pseudotree build_pseudotree(const Graph& g, Agent root);

  std::vector<int> parent_;  // -1 at the root
  std::vector<int> depth_;
  std::vector<Agent> order_;
  std::vector<int> position_;
  std::vector<AgentSet> prefix_;  // prefix_[i] = {b_1..b_i}
};

// Depth-first spanning tree from `root`, visiting neighbours in ascending
// index order. Non-tree edges of a DFS tree are back edges, so the branch
// property holds. Levels of the breadth-first order are sorted by DFS
// discovery time. Throws std::invalid_argument if g is disconnected or root is
// not an agent of g.
Pseudotree build_pseudotree(const Graph& g, Agent root = 0);

// 1-based index of `a` in the breadth-first order.
inline int breadth_first_position(const Pseudotree& pt, Agent a) {
  return pt.position(a);
}

}  // namespace csg

#endif  // CSG_PSEUDOTREE_H_
