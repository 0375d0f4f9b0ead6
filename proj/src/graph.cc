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

#include "csg/graph.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace csg {

std::ostream& operator<<(std::ostream& os, AgentSet s) {
  os << '{';
  bool first = true;
  for (Agent a : s) {
    if (!first) os << ',';
    os << a;
    first = false;
  }
  return os << '}';
}

Graph::Graph(int num_agents, std::span<const Edge> edges)
    : num_agents_(num_agents) {
  if (num_agents < 1 || num_agents > kMaxAgents) {
    throw std::invalid_argument("agent count " + std::to_string(num_agents) +
                                " outside [1, " + std::to_string(kMaxAgents) +
                                "]");
  }
  adjacency_.resize(num_agents);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_agents || v >= num_agents) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  ") has an endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop on agent " + std::to_string(u));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u] = adjacency_[u].with(v);
    adjacency_[v] = adjacency_[v].with(u);
  }
}

AgentSet Graph::neighborhood(AgentSet s) const {
  AgentSet out;
  for (Agent a : s) out |= adjacency_[a];
  return out - s;
}

Graph Graph::induced(AgentSet agents) const {
  std::vector<int> relabel(num_agents_, -1);
  int next = 0;
  for (Agent a : agents) relabel[a] = next++;
  std::vector<Edge> sub;
  for (auto [u, v] : edges_) {
    if (agents.contains(u) && agents.contains(v)) {
      sub.emplace_back(relabel[u], relabel[v]);
    }
  }
  return Graph(next, sub);
}

AgentSet reachable(const Graph& g, AgentSet from, AgentSet within) {
  AgentSet reached = from;
  AgentSet fresh = from;
  while (!fresh.empty()) {
    AgentSet next;
    for (Agent a : fresh) next |= g.neighbors(a);
    fresh = (next & within) - reached;
    reached |= fresh;
  }
  return reached;
}

bool is_connected(const Graph& g, AgentSet s) {
  if (s.size() <= 1) return true;
  return reachable(g, AgentSet::single(s.lowest()), s) == s;
}

std::vector<AgentSet> connected_components(const Graph& g, AgentSet s) {
  std::vector<AgentSet> blocks;
  while (!s.empty()) {
    AgentSet block = reachable(g, AgentSet::single(s.lowest()), s);
    blocks.push_back(block);
    s -= block;
  }
  return blocks;
}

}  // namespace csg
