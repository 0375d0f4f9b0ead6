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

#include "csg/instance.h"

#include <charconv>
#include <fstream>
#include <sstream>

namespace csg {

InstanceError::InstanceError(int line, std::string field,
                             const std::string& message)
    : std::runtime_error(
          (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
          (field.empty() ? std::string() : field + ": ") + message),
      line_(line),
      field_(std::move(field)) {}

Game Instance::make_game() const {
  if (const auto* t = std::get_if<TableSpec>(&game)) {
    return Game::table(num_agents, t->values);
  }
  const auto& s = std::get<SuperSubSpec>(game);
  return Game::supersub(s.weights, s.cost_factor);
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

template <class T>
T parse_number(std::string_view word, int line, const std::string& field) {
  T out{};
  auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
  if (ec != std::errc() || end != word.data() + word.size()) {
    throw InstanceError(line, field,
                        "expected an integer, got '" + std::string(word) + "'");
  }
  return out;
}

struct Parser {
  Instance inst;
  bool have_header = false;
  bool have_n = false;
  bool have_game = false;
  int game_line = 0;
  std::vector<int> edge_lines;
  int root_line = 0;

  void line(int no, const std::vector<std::string_view>& w) {
    const std::string_view key = w[0];
    if (!have_header) {
      if (key != "csg" || w.size() != 2) {
        throw InstanceError(no, "", "expected header 'csg 1'");
      }
      const int version = parse_number<int>(w[1], no, "csg");
      if (version != kInstanceFormatVersion) {
        throw InstanceError(no, "csg",
                            "unsupported version " + std::to_string(version));
      }
      have_header = true;
      return;
    }
    if (key == "n") {
      if (w.size() != 2) throw InstanceError(no, "n", "expected 'n <int>'");
      if (have_n) throw InstanceError(no, "n", "given twice");
      inst.num_agents = parse_number<int>(w[1], no, "n");
      have_n = true;
    } else if (key == "e") {
      if (w.size() != 3) throw InstanceError(no, "e", "expected 'e <i> <j>'");
      inst.edges.emplace_back(parse_number<int>(w[1], no, "e"),
                              parse_number<int>(w[2], no, "e"));
      edge_lines.push_back(no);
    } else if (key == "game") {
      if (have_game) throw InstanceError(no, "game", "given twice");
      if (w.size() < 2) throw InstanceError(no, "game", "missing game kind");
      have_game = true;
      game_line = no;
      if (w[1] == "table") {
        TableSpec t;
        for (std::size_t i = 2; i < w.size(); ++i) {
          t.values.push_back(parse_number<Value>(w[i], no, "game table"));
        }
        inst.game = std::move(t);
      } else if (w[1] == "supersub") {
        inst.game = parse_supersub(no, w);
      } else {
        throw InstanceError(no, "game",
                            "unknown game kind '" + std::string(w[1]) + "'");
      }
    } else if (key == "root") {
      if (w.size() != 2) {
        throw InstanceError(no, "root", "expected 'root <agent>'");
      }
      inst.root = parse_number<int>(w[1], no, "root");
      root_line = no;
    } else {
      throw InstanceError(no, "", "unknown keyword '" + std::string(key) + "'");
    }
  }

  static SuperSubSpec parse_supersub(int no,
                                     const std::vector<std::string_view>& w) {
    const std::string field = "game supersub";
    SuperSubSpec s;
    std::size_t i = 2;
    if (i >= w.size() || w[i] != "w") {
      throw InstanceError(no, field, "expected 'w' after 'supersub'");
    }
    for (++i; i < w.size() && w[i] != "k"; ++i) {
      s.weights.push_back(parse_number<Value>(w[i], no, field));
    }
    if (i + 4 != w.size() || w[i] != "k" || w[i + 2] != "seed") {
      throw InstanceError(no, field,
                          "expected 'w <weights> k <cost> seed <seed>'");
    }
    s.cost_factor = parse_number<Value>(w[i + 1], no, field);
    s.seed = parse_number<std::uint64_t>(w[i + 3], no, field);
    return s;
  }

  void validate() {
    if (!have_header) throw InstanceError(0, "", "empty instance");
    if (!have_n) throw InstanceError(0, "n", "missing");
    if (!have_game) throw InstanceError(0, "game", "missing");
    const int n = inst.num_agents;
    if (n < 1 || n > kMaxAgents) {
      throw InstanceError(0, "n",
                          std::to_string(n) + " outside [1, " +
                              std::to_string(kMaxAgents) + "]");
    }
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
      auto [u, v] = inst.edges[i];
      const std::string field =
          "e " + std::to_string(u) + " " + std::to_string(v);
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InstanceError(edge_lines[i], field,
                            "endpoint out of range for n=" + std::to_string(n));
      }
      if (u == v) throw InstanceError(edge_lines[i], field, "self-loop");
    }
    if (const auto* t = std::get_if<TableSpec>(&inst.game)) {
      if (n > kMaxTableAgents) {
        throw InstanceError(game_line, "game table",
                            "table games support at most " +
                                std::to_string(kMaxTableAgents) + " agents");
      }
      const std::size_t expected = (std::size_t{1} << n) - 1;
      if (t->values.size() != expected) {
        throw InstanceError(game_line, "game table",
                            "has " + std::to_string(t->values.size()) +
                                " values, expected " +
                                std::to_string(expected));
      }
    } else {
      const auto& s = std::get<SuperSubSpec>(inst.game);
      if (static_cast<int>(s.weights.size()) != n) {
        throw InstanceError(game_line, "game supersub",
                            "has " + std::to_string(s.weights.size()) +
                                " weights, expected " + std::to_string(n));
      }
      for (Value w : s.weights) {
        if (w < 0) {
          throw InstanceError(game_line, "game supersub",
                              "weights must be >= 0");
        }
      }
      if (s.cost_factor < 0) {
        throw InstanceError(game_line, "game supersub",
                            "cost factor must be >= 0");
      }
    }
    if (inst.root && (*inst.root < 0 || *inst.root >= n)) {
      throw InstanceError(root_line, "root", "agent out of range");
    }
  }
};

}  // namespace

Instance parse_instance(std::string_view text) {
  Parser parser;
  int no = 0;
  while (!text.empty()) {
    ++no;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    const auto words = split_words(raw);
    if (words.empty() || words[0].front() == '#') continue;
    parser.line(no, words);
  }
  parser.validate();
  return std::move(parser.inst);
}

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  out << "csg " << kInstanceFormatVersion << "\n";
  out << "n " << instance.num_agents << "\n";
  for (auto [u, v] : instance.edges) out << "e " << u << " " << v << "\n";
  if (const auto* t = std::get_if<TableSpec>(&instance.game)) {
    out << "game table";
    for (Value v : t->values) out << " " << v;
  } else {
    const auto& s = std::get<SuperSubSpec>(instance.game);
    out << "game supersub w";
    for (Value w : s.weights) out << " " << w;
    out << " k " << s.cost_factor << " seed " << s.seed;
  }
  out << "\n";
  if (instance.root) out << "root " << *instance.root << "\n";
  return out.str();
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(0, "", "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void write_instance_file(const std::filesystem::path& path,
                         const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_instance(instance);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace csg
