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

#ifndef CSG_SRC_TREE_SEARCH_H_
#define CSG_SRC_TREE_SEARCH_H_

#include <functional>
#include <vector>

#include "csg/connected_subsets.h"
#include "solver_util.h"

namespace csg::internal {

// The pseudotree-ordered depth-first search. With a shared table attached it
// closes a node from the table as soon as every level its remainder can touch
// has been published.
class PseudotreeSearch {
 public:
  PseudotreeSearch(const Game& game, const Graph& g, const Pseudotree& pt,
                   const TspBound& bound, Incumbent& incumbent,
                   SolverStats& stats, const SolveOptions& options,
                   const DpTable* shared, std::function<bool()> stop)
      : game_(game),
        g_(g),
        pt_(pt),
        bound_(bound),
        incumbent_(incumbent),
        stats_(stats),
        options_(options),
        shared_(shared),
        stop_(std::move(stop)) {}

  // Offers {A} if it beats all singletons, otherwise all singletons.
  void initialize();

  // Seeds of stage k: connected C with {b_1..b_{k-1}} ⊆ C ⊆ A∖{b_k}.
  SubsetQuery stage_query(int stage) const;
  std::vector<AgentSet> stage_seeds(int stage) const;

  // Searches every structure holding `seed` as the b_1 block. Returns false
  // if stopped.
  bool search_seed(AgentSet seed);
  // All seeds of one stage; false if stopped.
  bool run_stage(int stage);

 private:
  bool search(Partition& partial, AgentSet remainder, Value partial_value);
  bool try_shortcut(const Partition& partial, AgentSet remainder,
                    Value partial_value);

  const Game& game_;
  const Graph& g_;
  const Pseudotree& pt_;
  const TspBound& bound_;
  Incumbent& incumbent_;
  SolverStats& stats_;
  const SolveOptions& options_;
  const DpTable* shared_;
  std::function<bool()> stop_;
};

}  // namespace csg::internal

#endif  // CSG_SRC_TREE_SEARCH_H_
