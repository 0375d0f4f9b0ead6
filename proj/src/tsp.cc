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

#include "csg/connected_subsets.h"
#include "csg/solvers.h"
#include "tree_search.h"

namespace csg {
namespace internal {

void PseudotreeSearch::initialize() {
  const AgentSet all = g_.agents();
  const Value whole = game_.value(all);
  Partition alone = singletons(all);
  const Value split = partition_value(game_, alone);
  if (whole > split) {
    incumbent_.offer(whole, [&] { return Partition{{all}}; });
  } else {
    incumbent_.offer(split, [&] { return alone; });
  }
}

SubsetQuery PseudotreeSearch::stage_query(int stage) const {
  return {g_.agents().without(pt_.at(stage)), pt_.prefix_before(stage), {}};
}

std::vector<AgentSet> PseudotreeSearch::stage_seeds(int stage) const {
  return connected_subsets(g_, stage_query(stage));
}

bool PseudotreeSearch::run_stage(int stage) {
  return for_each_connected_subset(g_, stage_query(stage), [&](AgentSet seed) {
    ++stats_.subsets_enumerated;
    return search_seed(seed);
  });
}

bool PseudotreeSearch::search_seed(AgentSet seed) {
  if (stop_ && stop_()) return false;
  ++stats_.nodes_expanded;
  Partition partial{{seed}};
  return search(partial, g_.agents() - seed, game_.value(seed));
}

bool PseudotreeSearch::try_shortcut(const Partition& partial,
                                    AgentSet remainder, Value partial_value) {
  // Eligible once the DP sweep has published a level at or before the first
  // uncovered agent: every component of the remainder lies in that suffix.
  if (shared_->published_level() > pt_.first_position(remainder)) return false;
  const auto completion = table_completion(*shared_, g_, remainder);
  if (!completion) {
    ++stats_.guard_fallbacks;
    return false;
  }
  ++stats_.shortcuts_applied;
  incumbent_.offer(partial_value + *completion, [&] {
    Partition p = reconstruct(*shared_, g_,
                              Partition{connected_components(g_, remainder)});
    p.blocks.insert(p.blocks.end(), partial.blocks.begin(),
                    partial.blocks.end());
    return p;
  });
  return true;
}

bool PseudotreeSearch::search(Partition& partial, AgentSet remainder,
                              Value partial_value) {
  if (shared_ != nullptr && try_shortcut(partial, remainder, partial_value)) {
    return true;
  }
  const Agent anchor = pt_.first_in_order(remainder);
  const SubsetQuery extensions{remainder, AgentSet::single(anchor), {}};
  return for_each_connected_subset(g_, extensions, [&](AgentSet block) {
    ++stats_.subsets_enumerated;
    ++stats_.nodes_expanded;
    if (stop_ && stop_()) return false;
    partial.blocks.push_back(block);
    const Value value = partial_value + game_.value(block);
    const AgentSet rest = remainder - block;
    bool keep_going = true;
    if (rest.empty()) {
      ++stats_.structures_visited;
      if (options_.on_structure) options_.on_structure(partial);
      incumbent_.offer(value, [&] { return partial; });
    } else if (incumbent_.value() < bound_(value, rest)) {
      keep_going = search(partial, rest, value);
    } else {
      ++stats_.nodes_pruned;
    }
    partial.blocks.pop_back();
    return keep_going;
  });
}

}  // namespace internal

SolverResult tsp(const Game& game, const Graph& g, const Pseudotree& pt,
                 const TspBound& bound, const SolveOptions& options) {
  internal::check_inputs(game, g, pt);
  SolverResult result;
  internal::Incumbent incumbent(options, Clock::now());
  internal::Deadline deadline(options.deadline);
  internal::PseudotreeSearch search(game, g, pt, bound, incumbent,
                                    result.stats, options, nullptr,
                                    [&] { return deadline.expired(); });
  search.initialize();
  for (int stage = 2; stage <= g.num_agents(); ++stage) {
    if (!search.run_stage(stage)) {
      result.complete = false;
      break;
    }
    ++result.stats.search_stages_completed;
  }
  incumbent.finish(result);
  return result;
}

}  // namespace csg
