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

#include "csg/pseudotree.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace csg {

std::optional<Agent> Pseudotree::parent(Agent a) const {
  if (parent_[a] < 0) return std::nullopt;
  return parent_[a];
}

int Pseudotree::position(Agent a) const {
  if (a < 0 || a >= num_agents()) {
    throw std::out_of_range("agent " + std::to_string(a) +
                            " is not in the pseudotree");
  }
  return position_[a];
}

int Pseudotree::first_position(AgentSet s) const {
  assert(!s.empty());
  int best = num_agents() + 1;
  for (Agent a : s) best = std::min(best, position_[a]);
  return best;
}

bool Pseudotree::is_ancestor(Agent ancestor, Agent a) const {
  for (int cur = parent_[a]; cur >= 0; cur = parent_[cur]) {
    if (cur == ancestor) return true;
  }
  return false;
}

Pseudotree build_pseudotree(const Graph& g, Agent root) {
  const int n = g.num_agents();
  if (root < 0 || root >= n) {
    throw std::invalid_argument("pseudotree root " + std::to_string(root) +
                                " out of range");
  }
  if (!is_connected(g, g.agents())) {
    throw std::invalid_argument("pseudotree requires a connected graph");
  }

  Pseudotree pt;
  pt.parent_.assign(n, -1);
  pt.depth_.assign(n, 0);
  std::vector<int> discovered(n, -1);
  int clock = 0;

  // Iterative DFS; each stack frame remembers which neighbours remain.
  struct Frame {
    Agent agent;
    AgentSet pending;
  };
  std::vector<Frame> stack;
  discovered[root] = clock++;
  stack.push_back({root, g.neighbors(root)});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.pending.empty()) {
      stack.pop_back();
      continue;
    }
    Agent next = top.pending.lowest();
    top.pending = top.pending.without(next);
    if (discovered[next] >= 0) continue;
    discovered[next] = clock++;
    pt.parent_[next] = top.agent;
    pt.depth_[next] = pt.depth_[top.agent] + 1;
    stack.push_back({next, g.neighbors(next)});
  }

  pt.order_.resize(n);
  std::iota(pt.order_.begin(), pt.order_.end(), 0);
  std::sort(pt.order_.begin(), pt.order_.end(), [&](Agent a, Agent b) {
    if (pt.depth_[a] != pt.depth_[b]) return pt.depth_[a] < pt.depth_[b];
    return discovered[a] < discovered[b];
  });
  pt.position_.assign(n, 0);
  pt.prefix_.assign(n + 1, AgentSet());
  for (int i = 0; i < n; ++i) {
    pt.position_[pt.order_[i]] = i + 1;
    pt.prefix_[i + 1] = pt.prefix_[i].with(pt.order_[i]);
  }
  return pt;
}

}  // namespace csg
