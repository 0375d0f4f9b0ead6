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

#ifndef CSG_GAME_H_
#define CSG_GAME_H_

#include <cstdint>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "csg/agent_set.h"

namespace csg {

// Coalition values are exact integers. Instances with fractional data pick a
// fixed-point scale up front, so every comparison in the solvers is exact.
using Value = std::int64_t;

inline constexpr Value kPlusInfinity = std::numeric_limits<Value>::max();
inline constexpr Value kMinusInfinity = std::numeric_limits<Value>::min();

// Tabulated games are limited to this many agents (2^n - 1 stored values).
inline constexpr int kMaxTableAgents = 20;

// v(C) stored for every nonempty C, indexed by bitmask - 1.
struct TableGame {
  std::vector<Value> values;
};

// v = v_sup + v_sub with
//   v_sup(C) = (sum of w_i over C) * |C|     (weakly superadditive, w_i >= 0)
//   v_sub(C) = -cost_factor * |C|^2          (weakly subadditive, cost >= 0)
// Both cross terms have a fixed sign, which is what makes the split valid.
struct SuperSubGame {
  std::vector<Value> weights;
  Value cost_factor = 0;
};

// A characteristic function over n agents. Immutable and shareable.
class Game {
 public:
  // Throws std::invalid_argument if n is out of range or the table length is
  // not 2^n - 1.
  static Game table(int num_agents, std::vector<Value> values);
  // Throws std::invalid_argument on negative weights or cost factor.
  static Game supersub(std::vector<Value> weights, Value cost_factor);

  int num_agents() const { return num_agents_; }
  AgentSet agents() const { return AgentSet::first(num_agents_); }

  // v(C); v({}) = 0.
  Value value(AgentSet c) const;

  // True when v is stored as v_sup + v_sub.
  bool is_decomposed() const {
    return std::holds_alternative<SuperSubGame>(model_);
  }
  bool is_super_subadditive() const { return is_decomposed(); }

  // Throw std::logic_error when the game is not decomposed.
  Value sup_value(AgentSet c) const;
  Value sub_value(AgentSet c) const;

  const TableGame* as_table() const { return std::get_if<TableGame>(&model_); }
  const SuperSubGame* as_supersub() const {
    return std::get_if<SuperSubGame>(&model_);
  }

  // The same game restricted to `agents`, relabelled 0..k-1 in ascending
  // order (matches Graph::induced).
  Game restricted_to(AgentSet agents) const;

 private:
  Game(int num_agents, std::variant<TableGame, SuperSubGame> model)
      : num_agents_(num_agents), model_(std::move(model)) {}

  int num_agents_;
  std::variant<TableGame, SuperSubGame> model_;
};

inline Value coalition_value(const Game& game, AgentSet c) {
  return game.value(c);
}

// Draws w_i uniformly from [0, max_weight] and the cost factor from
// [0, max_cost_factor]. Deterministic for a fixed seed.
Game make_supersub_game(int num_agents, Value max_weight,
                        Value max_cost_factor, std::uint64_t seed);

// v(C) drawn uniformly from [0, max_per_agent * |C|] for every nonempty C.
Game make_random_table_game(int num_agents, Value max_per_agent,
                            std::uint64_t seed);

}  // namespace csg

#endif  // CSG_GAME_H_
