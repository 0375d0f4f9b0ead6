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

#include <algorithm>
#include <numeric>

#include "csg/solvers.h"
#include "solver_util.h"

namespace csg {

ContractedState ContractedState::root(const Graph& g) {
  ContractedState s(g);
  s.blocks_ = singletons(g.agents()).blocks;
  s.dashed_with_.assign(s.blocks_.size(), AgentSet());
  return s;
}

bool ContractedState::adjacent(int i, int j) const {
  return g_->neighborhood(blocks_[i]).intersects(blocks_[j]);
}

std::vector<std::pair<int, int>> ContractedState::solid_edges() const {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(blocks_.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (adjacent(i, j) && !is_dashed(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> ContractedState::dashed_edges() const {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(blocks_.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (adjacent(i, j) && is_dashed(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<AgentSet> ContractedState::merged() const {
  const int m = static_cast<int>(blocks_.size());
  std::vector<int> root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [i, j] : solid_edges()) root[find(i)] = find(j);
  std::vector<AgentSet> groups(m);
  for (int i = 0; i < m; ++i) groups[find(i)] |= blocks_[i];
  std::erase_if(groups, [](AgentSet s) { return s.empty(); });
  return groups;
}

void ContractedState::mark_dashed(int i, int j) {
  dashed_with_[i] |= blocks_[j];
  dashed_with_[j] |= blocks_[i];
}

ContractedState ContractedState::contracted(int i, int j) const {
  ContractedState next(*g_);
  const AgentSet joined = blocks_[i] | blocks_[j];
  const AgentSet joined_dashes = dashed_with_[i] | dashed_with_[j];
  for (int k = 0; k < static_cast<int>(blocks_.size()); ++k) {
    if (k == i || k == j) continue;
    AgentSet dashes = dashed_with_[k];
    // Parallel edges collapse into one; it stays dashed if either was.
    if (dashes.intersects(joined)) dashes |= joined;
    next.blocks_.push_back(blocks_[k]);
    next.dashed_with_.push_back(dashes);
  }
  // Keep blocks ordered by lowest agent.
  auto pos = std::find_if(next.blocks_.begin(), next.blocks_.end(),
                          [&](AgentSet b) { return b.lowest() > joined.lowest(); });
  const auto offset = pos - next.blocks_.begin();
  next.blocks_.insert(pos, joined);
  next.dashed_with_.insert(next.dashed_with_.begin() + offset, joined_dashes);
  return next;
}

std::vector<ContractedState> ContractedState::children() const {
  std::vector<ContractedState> out;
  ContractedState marked = *this;
  for (auto [i, j] : solid_edges()) {
    out.push_back(marked.contracted(i, j));
    marked.mark_dashed(i, j);
  }
  return out;
}

namespace {

class ContractionSearch {
 public:
  ContractionSearch(const Game& game, const CfssBound& bound,
                    internal::Incumbent& incumbent, SolverStats& stats,
                    const SolveOptions& options)
      : game_(game),
        bound_(bound),
        incumbent_(incumbent),
        stats_(stats),
        options_(options),
        deadline_(options.deadline) {}

  // False once the deadline stops the run.
  bool visit(const ContractedState& state) {
    const std::vector<AgentSet> merged = state.merged();
    if (!(incumbent_.value() < bound_(state.blocks(), merged))) {
      ++stats_.nodes_pruned;
      return true;
    }
    ++stats_.nodes_expanded;
    ++stats_.structures_visited;
    const Partition p = state.partition();
    if (options_.on_structure) options_.on_structure(p);
    incumbent_.offer(partition_value(game_, p), [&] { return p; });
    if (deadline_.expired()) return false;
    for (const ContractedState& child : state.children()) {
      if (!visit(child)) return false;
    }
    return true;
  }

 private:
  const Game& game_;
  const CfssBound& bound_;
  internal::Incumbent& incumbent_;
  SolverStats& stats_;
  const SolveOptions& options_;
  internal::Deadline deadline_;
};

}  // namespace

SolverResult cfss(const Game& game, const Graph& g, const CfssBound& bound,
                  const SolveOptions& options) {
  internal::check_inputs(game, g);
  SolverResult result;
  internal::Incumbent incumbent(options, Clock::now());
  ContractionSearch search(game, bound, incumbent, result.stats, options);
  result.complete = search.visit(ContractedState::root(g));
  incumbent.finish(result);
  return result;
}

}  // namespace csg
