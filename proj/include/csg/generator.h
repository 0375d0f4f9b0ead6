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

#ifndef CSG_GENERATOR_H_
#define CSG_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "csg/game.h"
#include "csg/graph.h"
#include "csg/instance.h"

namespace csg {

enum class GraphKind { kPath, kCycle, kStar, kComplete, kGnp };

struct GraphModel {
  GraphKind kind = GraphKind::kPath;
  double edge_probability = 0.5;  // kGnp only

  // path, cycle, star, complete, gnp:<p>
  std::string name() const;
  friend bool operator==(const GraphModel&, const GraphModel&) = default;
};

// Throws std::invalid_argument on an unknown name or p outside (0, 1].
GraphModel parse_graph_model(std::string_view name);

// path, cycle, star, complete, gnp:0.2, gnp:0.5, gnp:0.8
std::vector<GraphModel> default_graph_models();

enum class GameKind { kTable, kSuperSub };

std::string_view to_string(GameKind kind);
GameKind parse_game_kind(std::string_view name);

struct GameParams {
  GameKind kind = GameKind::kTable;
  Value max_per_agent = 100;   // table: v(C) in [0, max_per_agent * |C|]
  Value max_weight = 10;       // supersub: w_i in [0, max_weight]
  Value max_cost_factor = 10;  // supersub: cost in [0, max_cost_factor]
};

inline constexpr int kGnpRetryBudget = 10000;

// Edges of the model on n agents. gnp resamples until connected and throws
// std::runtime_error once kGnpRetryBudget draws have failed.
std::vector<Edge> generate_edges(const GraphModel& model, int n,
                                 std::mt19937_64& rng);

// Deterministic for a fixed seed.
Instance gen_instance(const GraphModel& model, int n, const GameParams& game,
                      std::uint64_t seed);

}  // namespace csg

#endif  // CSG_GENERATOR_H_
