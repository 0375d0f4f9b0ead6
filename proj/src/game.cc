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

#include "csg/game.h"

#include <random>
#include <stdexcept>
#include <string>

namespace csg {

Game Game::table(int num_agents, std::vector<Value> values) {
  if (num_agents < 1 || num_agents > kMaxTableAgents) {
    throw std::invalid_argument("table games support 1.." +
                                std::to_string(kMaxTableAgents) + " agents");
  }
  const std::size_t expected = (std::size_t{1} << num_agents) - 1;
  if (values.size() != expected) {
    throw std::invalid_argument("table has " + std::to_string(values.size()) +
                                " values, expected " +
                                std::to_string(expected));
  }
  return Game(num_agents, TableGame{std::move(values)});
}

Game Game::supersub(std::vector<Value> weights, Value cost_factor) {
  const int n = static_cast<int>(weights.size());
  if (n < 1 || n > kMaxAgents) {
    throw std::invalid_argument("supersub games support 1.." +
                                std::to_string(kMaxAgents) + " agents");
  }
  for (Value w : weights) {
    if (w < 0) throw std::invalid_argument("supersub weights must be >= 0");
  }
  if (cost_factor < 0) {
    throw std::invalid_argument("supersub cost factor must be >= 0");
  }
  return Game(n, SuperSubGame{std::move(weights), cost_factor});
}

namespace {

Value sup_of(const SuperSubGame& m, AgentSet c) {
  Value total = 0;
  for (Agent a : c) total += m.weights[a];
  return total * c.size();
}

Value sub_of(const SuperSubGame& m, AgentSet c) {
  const Value k = c.size();
  return -m.cost_factor * k * k;
}

}  // namespace

Value Game::value(AgentSet c) const {
  if (c.empty()) return 0;
  if (const auto* t = as_table()) return t->values[c.bits() - 1];
  const auto& m = std::get<SuperSubGame>(model_);
  return sup_of(m, c) + sub_of(m, c);
}

Value Game::sup_value(AgentSet c) const {
  const auto* m = as_supersub();
  if (m == nullptr) throw std::logic_error("game has no sup/sub split");
  return sup_of(*m, c);
}

Value Game::sub_value(AgentSet c) const {
  const auto* m = as_supersub();
  if (m == nullptr) throw std::logic_error("game has no sup/sub split");
  return sub_of(*m, c);
}

Game Game::restricted_to(AgentSet agents) const {
  const std::vector<Agent> members = agents.agents();
  const int k = static_cast<int>(members.size());
  if (const auto* m = as_supersub()) {
    std::vector<Value> weights;
    for (Agent a : members) weights.push_back(m->weights[a]);
    return supersub(std::move(weights), m->cost_factor);
  }
  std::vector<Value> values((std::size_t{1} << k) - 1);
  for (std::uint64_t local = 1; local < (std::uint64_t{1} << k); ++local) {
    AgentSet global;
    for (Agent i : AgentSet(local)) global = global.with(members[i]);
    values[local - 1] = value(global);
  }
  return table(k, std::move(values));
}

Game make_supersub_game(int num_agents, Value max_weight,
                        Value max_cost_factor, std::uint64_t seed) {
  if (num_agents < 1 || num_agents > kMaxAgents) {
    throw std::invalid_argument("agent count out of range");
  }
  if (max_weight < 0 || max_cost_factor < 0) {
    throw std::invalid_argument("supersub parameter ranges must be >= 0");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> weight(0, max_weight);
  std::vector<Value> weights(num_agents);
  for (Value& w : weights) w = weight(rng);
  std::uniform_int_distribution<Value> cost(0, max_cost_factor);
  return Game::supersub(std::move(weights), cost(rng));
}

Game make_random_table_game(int num_agents, Value max_per_agent,
                            std::uint64_t seed) {
  if (num_agents < 1 || num_agents > kMaxTableAgents) {
    throw std::invalid_argument("agent count out of range for a table game");
  }
  if (max_per_agent < 0) {
    throw std::invalid_argument("value range must be >= 0");
  }
  std::mt19937_64 rng(seed);
  std::vector<Value> values((std::size_t{1} << num_agents) - 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int size = AgentSet(i + 1).size();
    values[i] =
        std::uniform_int_distribution<Value>(0, max_per_agent * size)(rng);
  }
  return Game::table(num_agents, std::move(values));
}

}  // namespace csg
