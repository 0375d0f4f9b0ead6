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

// Plain-text instance files:
//
//   csg 1
//   n 4
//   e 0 1
//   e 1 2
//   game table <v_1> ... <v_{2^n-1}>          values in bitmask order
//   game supersub w <w_1..w_n> k <cost> seed <s>
//   root 2                                     optional pseudotree root
//
// Agents are 0-based. Blank lines and lines starting with '#' are ignored.

#ifndef CSG_INSTANCE_H_
#define CSG_INSTANCE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csg/game.h"
#include "csg/graph.h"

namespace csg {

inline constexpr int kInstanceFormatVersion = 1;

struct TableSpec {
  std::vector<Value> values;
  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};

struct SuperSubSpec {
  std::vector<Value> weights;
  Value cost_factor = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const SuperSubSpec&, const SuperSubSpec&) = default;
};

struct Instance {
  int num_agents = 0;
  std::vector<Edge> edges;
  std::variant<TableSpec, SuperSubSpec> game;
  std::optional<Agent> root;

  Graph graph() const { return Graph(num_agents, edges); }
  Game make_game() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Syntax errors carry the 1-based line; semantic ones name the offending
// field (for example "n", "e 0 5" or "game table").
class InstanceError : public std::runtime_error {
 public:
  InstanceError(int line, std::string field, const std::string& message);

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

// Disconnected graphs are accepted; the solve path decomposes them.
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& instance);

Instance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path,
                         const Instance& instance);

}  // namespace csg

#endif  // CSG_INSTANCE_H_
