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

#ifndef CSG_SRC_SOLVER_UTIL_H_
#define CSG_SRC_SOLVER_UTIL_H_

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <utility>

#include "csg/solver_result.h"
#include "csg/solvers.h"

namespace csg::internal {

void check_inputs(const Game& game, const Graph& g);
void check_inputs(const Game& game, const Graph& g, const Pseudotree& pt);

// Best structure found so far, shared between workers. Reads of the value are
// lock-free; an offer only takes the lock when it looks like an improvement
// and re-checks under it, so concurrent offers are compare-and-improve.
class Incumbent {
 public:
  Incumbent(const SolveOptions& options, Clock::time_point start)
      : on_incumbent_(options.on_incumbent), start_(start) {}

  Value value() const { return value_.load(std::memory_order_acquire); }

  // `make` builds the structure lazily, only when it is installed.
  template <class Make>
  bool offer(Value candidate, Make&& make) {
    if (!(value() < candidate)) return false;
    std::lock_guard lock(mu_);
    if (!(value_.load(std::memory_order_relaxed) < candidate)) return false;
    best_ = std::forward<Make>(make)();
    value_.store(candidate, std::memory_order_release);
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        Clock::now() - start_);
    trace_.push_back({elapsed, candidate});
    if (on_incumbent_) on_incumbent_(elapsed, candidate, best_);
    return true;
  }

  // Moves best structure, value and trace into `result`.
  void finish(SolverResult& result) {
    std::lock_guard lock(mu_);
    result.best = best_.canonical();
    result.best_value = value_.load();
    result.trace = std::move(trace_);
  }

 private:
  const IncumbentCallback& on_incumbent_;
  Clock::time_point start_;
  std::mutex mu_;
  std::atomic<Value> value_{kMinusInfinity};
  Partition best_;
  std::vector<TracePoint> trace_;
};

// Sticky deadline check that reads the clock only every few calls.
class Deadline {
 public:
  explicit Deadline(std::optional<Clock::time_point> at) : at_(at) {}

  bool expired() {
    if (expired_) return true;
    if (!at_) return false;
    if (++calls_ % 64 != 0 && calls_ != 1) return false;
    expired_ = Clock::now() >= *at_;
    return expired_;
  }

 private:
  std::optional<Clock::time_point> at_;
  std::uint64_t calls_ = 0;
  bool expired_ = false;
};

// One level of the pseudotree DP: solves every connected C ⊆ {b_k..b_n}
// holding b_k with A∖C connected. Returns false (leaving the level partly
// written and unpublished) if `stop` fired.
bool solve_dp_level(const Game& game, const Graph& g, const Pseudotree& pt,
                    int level, DpTable& table, SolverStats& stats,
                    const std::function<bool()>& stop);

// The A-side scan of one level: every connected S with
// {b_1..b_{k-1}} ⊆ S ⊆ A∖{b_k}, completed through the table.
// Tracks the best split in `best`.
bool scan_dp_stage(const Game& game, const Graph& g, const Pseudotree& pt,
                   int level, const DpTable& table, Incumbent& incumbent,
                   DpEntry& best, SolverStats& stats,
                   const std::function<bool()>& stop);

// v(S) + sum of v*(T) over the components T of C∖S. Every component must have
// an entry; a missing one is an internal invariant violation.
Value split_value(const Game& game, const Graph& g, const DpTable& table,
                  AgentSet c, AgentSet s);

}  // namespace csg::internal

#endif  // CSG_SRC_SOLVER_UTIL_H_
