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

#include "csg/bounds.h"

#include <stdexcept>
#include <string>

namespace csg {
namespace {

void require_decomposed(const Game& game) {
  if (!game.is_decomposed()) {
    throw std::invalid_argument(
        "bound needs a game with a super/subadditive split");
  }
}

Value singleton_sub_total(const Game& game, AgentSet remainder) {
  Value total = 0;
  for (Agent a : remainder) total += game.sub_value(AgentSet::single(a));
  return total;
}

}  // namespace

Value upper_bound_tsp(const Game& game, const Partition& p,
                      AgentSet remainder) {
  require_decomposed(game);
  return partition_value(game, p) + game.sup_value(remainder) +
         singleton_sub_total(game, remainder);
}

Value upper_bound_cfss(const Game& game, std::span<const AgentSet> blocks,
                       std::span<const AgentSet> merged) {
  require_decomposed(game);
  Value total = 0;
  for (AgentSet b : blocks) total += game.sub_value(b);
  for (AgentSet m : merged) total += game.sup_value(m);
  return total;
}

std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::kNone ? "none" : "supersub";
}

BoundKind parse_bound_kind(std::string_view name) {
  if (name == "none") return BoundKind::kNone;
  if (name == "supersub") return BoundKind::kSuperSub;
  throw std::invalid_argument("unknown bound '" + std::string(name) + "'");
}

TspBound make_tsp_bound(const Game& game, BoundKind kind) {
  if (kind == BoundKind::kNone || !game.is_decomposed()) {
    return [](Value, AgentSet) { return kPlusInfinity; };
  }
  return [&game](Value partial_value, AgentSet remainder) {
    return partial_value + game.sup_value(remainder) +
           singleton_sub_total(game, remainder);
  };
}

CfssBound make_cfss_bound(const Game& game, BoundKind kind) {
  if (kind == BoundKind::kNone || !game.is_decomposed()) {
    return [](std::span<const AgentSet>, std::span<const AgentSet>) {
      return kPlusInfinity;
    };
  }
  return [&game](std::span<const AgentSet> blocks,
                 std::span<const AgentSet> merged) {
    return upper_bound_cfss(game, blocks, merged);
  };
}

}  // namespace csg
