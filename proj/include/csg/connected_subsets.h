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

#ifndef CSG_CONNECTED_SUBSETS_H_
#define CSG_CONNECTED_SUBSETS_H_

#include <concepts>
#include <type_traits>
#include <vector>

#include "csg/agent_set.h"
#include "csg/graph.h"

namespace csg {

// Constraint triple for connected-subset enumeration. Candidates are the
// nonempty S with required ⊆ S ⊆ ground∖forbidden that induce a connected
// subgraph.
struct SubsetQuery {
  AgentSet ground;
  AgentSet required;
  AgentSet forbidden;
};

namespace internal {

// Frontier expansion with an exclusion mask. A node holds a connected set S;
// its children add one frontier agent v_i each, with v_1..v_{i-1} excluded
// for the rest of that branch. Every connected superset of the start agent is
// therefore reached along exactly one path.
template <class Fn>
class ConnectedSubsetWalker {
 public:
  ConnectedSubsetWalker(const Graph& g, AgentSet allowed, AgentSet required,
                        Fn& fn)
      : g_(g), allowed_(allowed), required_(required), fn_(fn) {}

  // Returns false once the callback asked to stop.
  bool walk(AgentSet s, AgentSet border, AgentSet excluded) {
    if (required_.subset_of(s)) {
      if (!emit(s)) return false;
    } else if (!required_.subset_of(
                   reachable(g_, s, allowed_ - excluded))) {
      return true;
    }
    AgentSet frontier = (border & allowed_) - excluded - s;
    for (Agent v : frontier) {
      if (!walk(s.with(v), border | g_.neighbors(v), excluded)) return false;
      excluded = excluded.with(v);
    }
    return true;
  }

 private:
  bool emit(AgentSet s) {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, AgentSet>, bool>) {
      return fn_(s);
    } else {
      fn_(s);
      return true;
    }
  }

  const Graph& g_;
  AgentSet allowed_;
  AgentSet required_;
  Fn& fn_;
};

}  // namespace internal

// Calls `fn` once for every connected subset matching `query`. `fn` may
// return bool; returning false stops the enumeration early, in which case
// this function returns false.
template <class Fn>
  requires std::invocable<Fn&, AgentSet>
bool for_each_connected_subset(const Graph& g, const SubsetQuery& query,
                               Fn&& fn) {
  const AgentSet allowed = query.ground - query.forbidden;
  if (!query.required.subset_of(allowed)) return true;
  internal::ConnectedSubsetWalker<std::remove_reference_t<Fn>> walker(
      g, allowed, query.required, fn);
  if (!query.required.empty()) {
    Agent start = query.required.lowest();
    return walker.walk(AgentSet::single(start), g.neighbors(start),
                       AgentSet());
  }
  // Unconstrained: partition the output by lowest member.
  AgentSet lower;
  for (Agent start : allowed) {
    if (!walker.walk(AgentSet::single(start), g.neighbors(start), lower)) {
      return false;
    }
    lower = lower.with(start);
  }
  return true;
}

// Materialized form, in generation order.
std::vector<AgentSet> connected_subsets(const Graph& g,
                                        const SubsetQuery& query);

}  // namespace csg

#endif  // CSG_CONNECTED_SUBSETS_H_
