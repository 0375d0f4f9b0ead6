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

#include <atomic>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>

#include "csg/solvers.h"
#include "tree_search.h"

namespace csg {
namespace {

// Coverage bookkeeping: the DP side has covered stages > next_level, the
// search side stages < stage. The whole space is covered once
// next_level < stage.
struct Frontiers {
  std::atomic<int> next_level;
  std::atomic<int> stage{2};
  bool crossed() const { return next_level.load() < stage.load(); }
};

struct Shared {
  const Game& game;
  const Graph& g;
  const Pseudotree& pt;
  DpTable& table;
  internal::Incumbent& incumbent;
  DpEntry root;
};

void run_interleaved(Shared& sh, const DtspOptions& dtsp,
                     const TspBound& bound, const SolveOptions& options,
                     Frontiers& fr, SolverStats& stats) {
  internal::Deadline deadline(options.deadline);
  const std::function<bool()> stop = [&] { return deadline.expired(); };
  internal::PseudotreeSearch search(sh.game, sh.g, sh.pt, bound, sh.incumbent,
                                    stats, options, &sh.table, stop);
  if (dtsp.run_search_worker) search.initialize();

  std::optional<std::mt19937_64> rng;
  if (dtsp.schedule_seed) rng.emplace(*dtsp.schedule_seed);
  std::vector<AgentSet> seeds;
  std::size_t next_seed = 0;
  bool seeds_loaded = false;
  bool dp_turn = true;

  while (!fr.crossed()) {
    if (deadline.expired()) {
      return;
    }
    bool use_dp = dtsp.run_dp_worker;
    if (dtsp.run_dp_worker && dtsp.run_search_worker) {
      use_dp = rng ? ((*rng)() & 1U) != 0 : dp_turn;
      dp_turn = !dp_turn;
    }

    if (use_dp) {
      const int level = fr.next_level.load();
      if (!internal::solve_dp_level(sh.game, sh.g, sh.pt, level, sh.table,
                                    stats, stop)) {
        return;
      }
      sh.table.publish(level);
      if (!internal::scan_dp_stage(sh.game, sh.g, sh.pt, level, sh.table,
                                   sh.incumbent, sh.root, stats, stop)) {
        return;
      }
      fr.next_level.store(level - 1);
      ++stats.dp_levels_completed;
      continue;
    }

    // One seed coalition of the current search stage.
    const int stage = fr.stage.load();
    if (!seeds_loaded) {
      seeds = search.stage_seeds(stage);
      stats.subsets_enumerated += seeds.size();
      next_seed = 0;
      seeds_loaded = true;
    }
    if (next_seed < seeds.size() && !search.search_seed(seeds[next_seed++])) {
      return;
    }
    if (next_seed == seeds.size()) {
      fr.stage.store(stage + 1);
      ++stats.search_stages_completed;
      seeds_loaded = false;
    }
  }
}

void run_parallel(Shared& sh, const DtspOptions& dtsp, const TspBound& bound,
                  const SolveOptions& options, Frontiers& fr,
                  SolverStats& dp_stats, SolverStats& search_stats) {
  std::atomic<bool> out_of_time{false};
  const int n = sh.g.num_agents();

  auto dp_worker = [&] {
    internal::Deadline deadline(options.deadline);
    while (true) {
      const int level = fr.next_level.load();
      if (level < fr.stage.load()) return;
      // Abandon the level if the search finishes its stage first.
      const std::function<bool()> stop = [&] {
        if (out_of_time.load() || deadline.expired()) {
          out_of_time.store(true);
          return true;
        }
        return level < fr.stage.load();
      };
      if (!internal::solve_dp_level(sh.game, sh.g, sh.pt, level, sh.table,
                                    dp_stats, stop)) {
        return;
      }
      sh.table.publish(level);
      if (!internal::scan_dp_stage(sh.game, sh.g, sh.pt, level, sh.table,
                                   sh.incumbent, sh.root, dp_stats, stop)) {
        return;
      }
      fr.next_level.store(level - 1);
      ++dp_stats.dp_levels_completed;
    }
  };

  auto search_worker = [&] {
    internal::Deadline deadline(options.deadline);
    int stage = 2;
    const std::function<bool()> stop = [&] {
      if (out_of_time.load() || deadline.expired()) {
        out_of_time.store(true);
        return true;
      }
      return fr.next_level.load() < stage;
    };
    internal::PseudotreeSearch search(sh.game, sh.g, sh.pt, bound,
                                      sh.incumbent, search_stats, options,
                                      &sh.table, stop);
    search.initialize();
    for (; stage <= n; ++stage) {
      if (stop() || !search.run_stage(stage)) return;
      fr.stage.store(stage + 1);
      ++search_stats.search_stages_completed;
    }
  };

  std::thread dp_thread;
  std::thread search_thread;
  if (dtsp.run_dp_worker) dp_thread = std::thread(dp_worker);
  if (dtsp.run_search_worker) search_thread = std::thread(search_worker);
  if (dp_thread.joinable()) dp_thread.join();
  if (search_thread.joinable()) search_thread.join();
}

}  // namespace

SolverResult d_tsp(const Game& game, const Graph& g, const Pseudotree& pt,
                   const DtspOptions& dtsp, const SolveOptions& options) {
  internal::check_inputs(game, g, pt);
  if (!dtsp.run_dp_worker && !dtsp.run_search_worker) {
    throw std::invalid_argument("d-tsp needs at least one worker");
  }
  const AgentSet all = g.agents();
  SolverResult result;
  internal::Incumbent incumbent(options, Clock::now());
  auto table = std::make_shared<DpTable>(pt);
  Shared sh{game, g, pt, *table, incumbent, DpEntry{game.value(all), all}};
  incumbent.offer(sh.root.best_value, [&] { return Partition{{all}}; });

  const TspBound bound = make_tsp_bound(game, dtsp.bound);
  Frontiers fr;
  fr.next_level.store(g.num_agents());
  if (dtsp.mode == DtspMode::kInterleaved) {
    run_interleaved(sh, dtsp, bound, options, fr, result.stats);
  } else {
    SolverStats search_stats;
    run_parallel(sh, dtsp, bound, options, fr, result.stats, search_stats);
    result.stats += search_stats;
  }

  result.stats.frontiers_crossed = fr.crossed();
  // A deadline that fires after the crossing does not make the run partial.
  result.complete = result.stats.frontiers_crossed;
  incumbent.finish(result);
  if (options.keep_table) result.table = std::move(table);
  return result;
}

}  // namespace csg
