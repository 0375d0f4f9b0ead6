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

#ifndef CSG_BOUNDS_H_
#define CSG_BOUNDS_H_

#include <functional>
#include <span>
#include <string_view>

#include "csg/agent_set.h"
#include "csg/game.h"
#include "csg/partition.h"

namespace csg {

// Upper bound on every coalition structure that extends the partial partition
// p by a connected partition of `remainder`:
//   V(p) + v_sup(remainder) + sum over a in remainder of v_sub({a}).
// Throws std::invalid_argument if the game is not decomposed.
Value upper_bound_tsp(const Game& game, const Partition& p, AgentSet remainder);

// Upper bound on the edge-contraction subtree below p:
//   V_sub(p) + V_sup(p_merge)
// where p_merge joins the blocks of p along solid edges. Throws
// std::invalid_argument if the game is not decomposed.
Value upper_bound_cfss(const Game& game, std::span<const AgentSet> blocks,
                       std::span<const AgentSet> merged);
inline Value upper_bound_cfss(const Game& game, const Partition& p,
                              const Partition& p_merge) {
  return upper_bound_cfss(game, p.blocks, p_merge.blocks);
}

enum class BoundKind { kNone, kSuperSub };

std::string_view to_string(BoundKind kind);
// Throws std::invalid_argument on an unknown name.
BoundKind parse_bound_kind(std::string_view name);

// Bound hook for the pseudotree search: (V(P), agents not yet covered) ->
// bound. A subtree is expanded only while incumbent < bound.
using TspBound = std::function<Value(Value partial_value, AgentSet remainder)>;

// Bound hook for the contraction search: (blocks, merged blocks) -> bound.
using CfssBound = std::function<Value(std::span<const AgentSet> blocks,
                                      std::span<const AgentSet> merged)>;

// kNone, or kSuperSub on a game without a sup/sub split, yields the
// prune-nothing hook (+infinity). The game must outlive the returned hook.
TspBound make_tsp_bound(const Game& game, BoundKind kind);
CfssBound make_cfss_bound(const Game& game, BoundKind kind);

}  // namespace csg

#endif  // CSG_BOUNDS_H_
