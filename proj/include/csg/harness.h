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

#ifndef CSG_HARNESS_H_
#define CSG_HARNESS_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "csg/generator.h"
#include "csg/instance.h"
#include "csg/solvers.h"

namespace csg {

// One solver configuration: an algorithm plus the knobs that matter for it.
struct Variant {
  Algorithm algorithm = Algorithm::kDype;
  BoundKind bound = BoundKind::kNone;       // tsp, d-tsp, cfss
  DtspMode mode = DtspMode::kInterleaved;   // d-tsp

  // "dype", "tsp:supersub", "d-tsp:parallel", "d-tsp:parallel:supersub", ...
  std::string name() const;
  friend bool operator==(const Variant&, const Variant&) = default;
};

// Accepts the forms produced by Variant::name(). Throws std::invalid_argument.
Variant parse_variant(std::string_view name);

// dype, tsp:none, tsp:supersub, dype-star, d-tsp:interleaved,
// d-tsp:parallel, cfss
std::vector<Variant> default_variants();

struct SolveRequest {
  Variant variant;
  std::optional<Clock::time_point> deadline;
  IncumbentCallback on_incumbent;
  // Interleaved d-tsp only.
  std::optional<std::uint64_t> schedule_seed;
  bool keep_table = false;
  // Test hook: negates the tsp bound so that it prunes everything.
  bool flip_bound_sign = false;
};

// Runs one variant on a connected graph.
SolverResult run_variant(const Game& game, const Graph& g,
                         std::optional<Agent> root, const SolveRequest& request);

// Splits the graph into components, solves each on its induced subgame and
// merges the optima. Components share one deadline. The merged trace reports
// the whole-instance value of the current incumbent, with unsolved components
// counted as single blocks.
SolverResult solve_instance(const Instance& instance,
                            const SolveRequest& request);

// Blocks as agent lists, for example "{0,1} {2}".
std::string format_structure(const Partition& p);

// ---- verify ---------------------------------------------------------------

struct VerifyConfig {
  std::vector<GraphModel> models = default_graph_models();
  int min_agents = 1;
  int max_agents = 9;
  int seeds = 100;
  std::uint64_t first_seed = 0;
  std::vector<Variant> variants = default_variants();
  std::vector<GameKind> game_kinds = {GameKind::kTable};
  bool audit_tables = true;
  bool flip_bound_sign = false;
};

struct VerifyFailure {
  GraphModel model;
  int num_agents = 0;
  GameKind game_kind = GameKind::kTable;
  std::uint64_t seed = 0;
  std::string variant;
  std::string detail;

  // A `csg gen` command line that rebuilds the instance.
  std::string reproduce() const;
};

struct VerifyReport {
  std::uint64_t instances = 0;
  std::uint64_t runs = 0;
  std::uint64_t guard_fallbacks = 0;
  std::uint64_t audited_tables = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Checks per run: value equal to the oracle, a feasible structure worth its
// reported value, a non-decreasing trace from v(A) to the optimum for the
// anytime variants, frontier crossing and no guard fallback for d-tsp, and a
// clean table audit for dype and dype-star. `log` gets one line per failure.
VerifyReport run_verify(const VerifyConfig& config, std::ostream* log = nullptr);

// ---- bench ----------------------------------------------------------------

struct BenchInstance {
  std::string id;
  Instance instance;
};

struct BenchConfig {
  std::vector<BenchInstance> instances;
  std::vector<Variant> variants;
  int repetitions = 1;
  std::optional<std::chrono::milliseconds> budget;
  // One trace CSV per run when set: <id>.<variant>.<repetition>.csv
  std::optional<std::filesystem::path> trace_dir;
};

enum class RunStatus { kComplete, kTimeout, kIncomplete };

std::string_view to_string(RunStatus status);

struct BenchRow {
  std::string instance;
  std::string variant;
  int repetition = 0;
  RunStatus status = RunStatus::kComplete;
  // Empty for an incomplete run without interim output.
  std::optional<Value> best_value;
  std::int64_t wall_us = 0;
  SolverStats stats;
  std::vector<TracePoint> trace;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  // Instances whose completed runs disagree on the best value.
  std::vector<std::string> inconsistent_instances() const;
};

// Runs every instance x variant x repetition sequentially. Over budget, an
// anytime run is a timeout carrying its incumbent at cutoff; any other run is
// incomplete. Throws std::runtime_error if a trace file cannot be written.
BenchReport run_bench(const BenchConfig& config);

// instance,algorithm,repetition,status,best_value,wall_us,subsets,
// dp_entries,nodes_expanded,nodes_pruned
void write_bench_csv(std::ostream& out, const BenchReport& report);

// elapsed_us,value with strictly increasing timestamps; points sharing a
// timestamp collapse onto the last of them.
void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace);

}  // namespace csg

#endif  // CSG_HARNESS_H_
