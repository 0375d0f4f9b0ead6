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

#ifndef CSG_DP_TABLE_H_
#define CSG_DP_TABLE_H_

#include <atomic>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "csg/agent_set.h"
#include "csg/game.h"
#include "csg/graph.h"
#include "csg/partition.h"
#include "csg/pseudotree.h"

namespace csg {

// v*(C) and the anchored block chosen for C.
struct DpEntry {
  Value best_value = kMinusInfinity;
  AgentSet best_subset;
};

// Solved subproblems of the pseudotree DP, sharded by sweep level: an entry C
// lives in the shard of its first agent in breadth-first order, which is the
// level at which the sweep solves it. Entries are write-once.
//
// Sharing contract for the hybrid solver: one writer fills the shard of the
// level it is working on and then publishes that level; readers only touch
// shards at or above published_level(). Publication is a release store, so no
// further locking is needed.
class DpTable {
 public:
  explicit DpTable(const Pseudotree& pt);

  const Pseudotree& pseudotree() const { return pt_; }

  // nullptr when C has not been solved.
  const DpEntry* find(AgentSet c) const;
  // Throws std::logic_error if C already has an entry.
  void insert(AgentSet c, const DpEntry& entry);

  // Smallest level whose shard (and every shard after it) is complete;
  // n + 1 before the first level is done.
  int published_level() const {
    return published_.load(std::memory_order_acquire);
  }
  void publish(int level) { published_.store(level, std::memory_order_release); }

  std::size_t size() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& shard : shards_) {
      for (const auto& [c, entry] : shard) fn(c, entry);
    }
  }

 private:
  Pseudotree pt_;
  std::vector<std::unordered_map<AgentSet, DpEntry>> shards_;  // by level
  std::atomic<int> published_;
};

// Expands every block C of `seed` into bestSubset(C) plus the connected
// components of C∖bestSubset(C), repeating on the components until each one
// is its own best subset. bestSubset blocks are final: they were scored with
// v, not v*. Singletons need no entry. Throws std::logic_error when a needed
// entry is missing.
Partition reconstruct(const DpTable& table, const Graph& g,
                      const Partition& seed);

// Checks each entry against the connected-split recurrence
//   v*(C) = max over connected S ⊆ C holding C's anchor of
//           v(S) + sum of v*(T) over components T of C∖S,
// plus that the stored best subset attains it. The maximization enumerates
// submasks directly. Returns one message per violation.
std::vector<std::string> audit_dp_table(const Game& game, const Graph& g,
                                        const DpTable& table);

}  // namespace csg

#endif  // CSG_DP_TABLE_H_
