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

#include "csg/dp_table.h"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace csg {

DpTable::DpTable(const Pseudotree& pt)
    : pt_(pt),
      shards_(pt.num_agents() + 1),
      published_(pt.num_agents() + 1) {}

const DpEntry* DpTable::find(AgentSet c) const {
  if (c.empty()) return nullptr;
  const auto& shard = shards_[pt_.first_position(c)];
  auto it = shard.find(c);
  return it == shard.end() ? nullptr : &it->second;
}

void DpTable::insert(AgentSet c, const DpEntry& entry) {
  auto [it, fresh] = shards_[pt_.first_position(c)].emplace(c, entry);
  if (!fresh) {
    std::ostringstream msg;
    msg << "dp entry for " << c << " written twice";
    throw std::logic_error(msg.str());
  }
}

std::size_t DpTable::size() const {
  std::size_t total = 0;
  for (const auto& shard : shards_) total += shard.size();
  return total;
}

Partition reconstruct(const DpTable& table, const Graph& g,
                      const Partition& seed) {
  Partition out;
  std::vector<AgentSet> pending = seed.blocks;
  while (!pending.empty()) {
    AgentSet c = pending.back();
    pending.pop_back();
    // A singleton has one partition, solved or not.
    if (c.size() == 1) {
      out.blocks.push_back(c);
      continue;
    }
    const DpEntry* entry = table.find(c);
    if (entry == nullptr) {
      std::ostringstream msg;
      msg << "reconstruct: no dp entry for " << c;
      throw std::logic_error(msg.str());
    }
    out.blocks.push_back(entry->best_subset);
    for (AgentSet t : connected_components(g, c - entry->best_subset)) {
      pending.push_back(t);
    }
  }
  return out.canonical();
}

std::vector<std::string> audit_dp_table(const Game& game, const Graph& g,
                                        const DpTable& table) {
  std::vector<std::string> problems;
  const Pseudotree& pt = table.pseudotree();
  auto report = [&](AgentSet c, const std::string& what) {
    std::ostringstream msg;
    msg << "entry " << c << ": " << what;
    problems.push_back(msg.str());
  };
  // Value of the split (S, C∖S), or nullopt when a component is unsolved.
  auto split_value = [&](AgentSet c, AgentSet s) -> std::optional<Value> {
    Value total = game.value(s);
    for (AgentSet t : connected_components(g, c - s)) {
      const DpEntry* sub = table.find(t);
      if (sub == nullptr) return std::nullopt;
      total += sub->best_value;
    }
    return total;
  };

  table.for_each([&](AgentSet c, const DpEntry& entry) {
    if (!is_connected(g, c)) report(c, "key is not connected");
    const Agent anchor = pt.first_in_order(c);
    const AgentSet s = entry.best_subset;
    if (!s.subset_of(c) || !s.contains(anchor) || !is_connected(g, s)) {
      report(c, "best subset is not a connected anchored subset");
      return;
    }
    auto witnessed = split_value(c, s);
    if (!witnessed) {
      report(c, "best subset leaves an unsolved component");
    } else if (*witnessed != entry.best_value) {
      report(c, "stored value differs from its witness split");
    }
    // Independent maximization over all submasks holding the anchor.
    Value best = kMinusInfinity;
    const AgentSet rest = c.without(anchor);
    std::uint64_t sub = rest.bits();
    while (true) {
      AgentSet cand = AgentSet(sub).with(anchor);
      if (is_connected(g, cand)) {
        auto v = split_value(c, cand);
        if (!v) {
          report(c, "a connected split leaves an unsolved component");
        } else if (*v > best) {
          best = *v;
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest.bits();
    }
    if (best != entry.best_value) {
      report(c, "stored value is not the recurrence maximum");
    }
  });
  return problems;
}

}  // namespace csg
