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

#ifndef CSG_GRAPH_H_
#define CSG_GRAPH_H_

#include <span>
#include <utility>
#include <vector>

#include "csg/agent_set.h"

namespace csg {

using Edge = std::pair<Agent, Agent>;

// Undirected simple graph over agents 0..n-1. Immutable once built.
class Graph {
 public:
  // Throws std::invalid_argument on a self-loop, an out-of-range endpoint or
  // an agent count outside [1, kMaxAgents]. Duplicate edges (in either
  // orientation) are collapsed.
  Graph(int num_agents, std::span<const Edge> edges);
  Graph(int num_agents, std::initializer_list<Edge> edges)
      : Graph(num_agents, std::span<const Edge>(edges.begin(), edges.size())) {}

  int num_agents() const { return num_agents_; }
  AgentSet agents() const { return AgentSet::first(num_agents_); }

  // Sorted, each as (min, max).
  const std::vector<Edge>& edges() const { return edges_; }

  AgentSet neighbors(Agent a) const { return adjacency_[a]; }
  // Agents outside `s` adjacent to some member of `s`.
  AgentSet neighborhood(AgentSet s) const;
  bool adjacent(Agent a, Agent b) const { return adjacency_[a].contains(b); }

  // Subgraph induced by `agents`, relabelled 0..k-1 in ascending order.
  Graph induced(AgentSet agents) const;

 private:
  int num_agents_;
  std::vector<Edge> edges_;
  std::vector<AgentSet> adjacency_;
};

// The empty set and singletons count as connected.
bool is_connected(const Graph& g, AgentSet s);

// Maximal connected blocks of `s`, ordered by lowest agent.
std::vector<AgentSet> connected_components(const Graph& g, AgentSet s);

// Agents reachable from `from` without leaving `within` (from is included).
AgentSet reachable(const Graph& g, AgentSet from, AgentSet within);

}  // namespace csg

#endif  // CSG_GRAPH_H_
