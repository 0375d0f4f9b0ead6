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

#include "csg/generator.h"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace csg {

std::string GraphModel::name() const {
  switch (kind) {
    case GraphKind::kPath: return "path";
    case GraphKind::kCycle: return "cycle";
    case GraphKind::kStar: return "star";
    case GraphKind::kComplete: return "complete";
    case GraphKind::kGnp: {
      std::ostringstream out;
      out << "gnp:" << edge_probability;
      return out.str();
    }
  }
  return "?";
}

GraphModel parse_graph_model(std::string_view name) {
  if (name == "path") return {GraphKind::kPath};
  if (name == "cycle") return {GraphKind::kCycle};
  if (name == "star") return {GraphKind::kStar};
  if (name == "complete") return {GraphKind::kComplete};
  if (name.starts_with("gnp:")) {
    const std::string p_text(name.substr(4));
    std::size_t used = 0;
    double p = 0;
    try {
      p = std::stod(p_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != p_text.size() || used == 0 || !(p > 0.0 && p <= 1.0)) {
      throw std::invalid_argument("gnp edge probability must be in (0, 1]");
    }
    return {GraphKind::kGnp, p};
  }
  throw std::invalid_argument("unknown graph model '" + std::string(name) +
                              "'");
}

std::vector<GraphModel> default_graph_models() {
  return {{GraphKind::kPath},          {GraphKind::kCycle},
          {GraphKind::kStar},          {GraphKind::kComplete},
          {GraphKind::kGnp, 0.2},      {GraphKind::kGnp, 0.5},
          {GraphKind::kGnp, 0.8}};
}

std::string_view to_string(GameKind kind) {
  return kind == GameKind::kTable ? "table" : "supersub";
}

GameKind parse_game_kind(std::string_view name) {
  if (name == "table") return GameKind::kTable;
  if (name == "supersub") return GameKind::kSuperSub;
  throw std::invalid_argument("unknown game kind '" + std::string(name) + "'");
}

std::vector<Edge> generate_edges(const GraphModel& model, int n,
                                 std::mt19937_64& rng) {
  std::vector<Edge> edges;
  switch (model.kind) {
    case GraphKind::kPath:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphKind::kCycle:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      if (n >= 3) edges.emplace_back(0, n - 1);
      break;
    case GraphKind::kStar:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case GraphKind::kComplete:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
      break;
    case GraphKind::kGnp: {
      std::bernoulli_distribution coin(model.edge_probability);
      for (int attempt = 0; attempt < kGnpRetryBudget; ++attempt) {
        edges.clear();
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) edges.emplace_back(i, j);
          }
        }
        if (is_connected(Graph(n, edges), AgentSet::first(n))) return edges;
      }
      throw std::runtime_error("no connected " + model.name() + " graph on " +
                               std::to_string(n) + " agents after " +
                               std::to_string(kGnpRetryBudget) +
                               " draws; try a higher p");
    }
  }
  return edges;
}

Instance gen_instance(const GraphModel& model, int n, const GameParams& game,
                      std::uint64_t seed) {
  if (n < 1 || n > kMaxAgents) {
    throw std::invalid_argument("agent count out of range");
  }
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.num_agents = n;
  inst.edges = generate_edges(model, n, rng);
  const std::uint64_t game_seed = rng();
  if (game.kind == GameKind::kTable) {
    const Game g = make_random_table_game(n, game.max_per_agent, game_seed);
    inst.game = TableSpec{g.as_table()->values};
  } else {
    const Game g = make_supersub_game(n, game.max_weight,
                                      game.max_cost_factor, game_seed);
    inst.game = SuperSubSpec{g.as_supersub()->weights,
                             g.as_supersub()->cost_factor, game_seed};
  }
  return inst;
}

}  // namespace csg
