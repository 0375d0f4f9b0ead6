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

// Command-line front end: gen, solve, verify and bench.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 instance error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csg/harness.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInstance = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

csg::Instance load_instance(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return csg::parse_instance(buffer.str());
  }
  return csg::read_instance_file(path);
}

template <class T, class Parse>
std::vector<T> parse_list(const std::vector<std::string>& names, Parse parse) {
  std::vector<T> out;
  for (const std::string& name : names) {
    try {
      out.push_back(parse(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

void print_stats(std::ostream& out, const csg::SolverStats& s) {
  out << "stats subsets=" << s.subsets_enumerated
      << " dp_entries=" << s.dp_entries
      << " nodes_expanded=" << s.nodes_expanded
      << " nodes_pruned=" << s.nodes_pruned
      << " structures=" << s.structures_visited
      << " shortcuts=" << s.shortcuts_applied
      << " guard_fallbacks=" << s.guard_fallbacks << "\n";
}

struct GenArgs {
  std::string model = "cycle";
  int n = 4;
  std::string game = "table";
  std::uint64_t seed = 0;
  std::optional<int> root;
  std::string out;
};

int run_gen(const GenArgs& args) {
  csg::GraphModel model;
  csg::GameParams params;
  try {
    model = csg::parse_graph_model(args.model);
    params.kind = csg::parse_game_kind(args.game);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (params.kind == csg::GameKind::kTable && args.n > csg::kMaxTableAgents) {
    throw UsageError("table games support at most " +
                     std::to_string(csg::kMaxTableAgents) + " agents");
  }
  csg::Instance inst = csg::gen_instance(model, args.n, params, args.seed);
  if (args.root) {
    if (*args.root < 0 || *args.root >= args.n) {
      throw UsageError("--root outside the agent range");
    }
    inst.root = *args.root;
  }
  if (args.out.empty()) {
    std::cout << csg::write_instance(inst);
  } else {
    csg::write_instance_file(args.out, inst);
  }
  return kExitOk;
}

struct SolveArgs {
  std::string instance;
  std::string algorithm = "dype";
  std::optional<std::string> bound;
  std::optional<std::string> mode;
  std::string trace;
  std::optional<long> budget_ms;
  std::optional<std::uint64_t> seed;
};

int run_solve(const SolveArgs& args) {
  csg::Variant v;
  try {
    v = csg::parse_variant(args.algorithm);
    if (args.bound) v.bound = csg::parse_bound_kind(*args.bound);
    if (args.mode) v.mode = csg::parse_dtsp_mode(*args.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const csg::Instance inst = load_instance(args.instance);

  csg::SolveRequest request;
  request.variant = v;
  request.schedule_seed = args.seed;
  const auto start = csg::Clock::now();
  if (args.budget_ms) {
    request.deadline = start + std::chrono::milliseconds(*args.budget_ms);
  }
  csg::SolverResult r;
  try {
    r = csg::solve_instance(inst, request);
  } catch (const std::invalid_argument& e) {
    // Oracle cap and similar size limits.
    throw csg::InstanceError(0, "", e.what());
  }

  if (!args.trace.empty()) {
    if (csg::is_anytime(v.algorithm)) {
      std::ofstream out(args.trace);
      if (!out) throw UsageError("cannot write " + args.trace);
      csg::write_trace_csv(out, r.trace);
    } else {
      std::cerr << "note: " << csg::to_string(v.algorithm)
                << " has no interim solutions; no trace written\n";
    }
  }

  const bool has_answer =
      r.complete || (csg::is_anytime(v.algorithm) && !r.best.blocks.empty());
  std::cout << "algorithm " << v.name() << "\n";
  if (has_answer) {
    std::cout << "value " << r.best_value << "\n";
    std::cout << "structure " << csg::format_structure(r.best) << "\n";
  } else {
    std::cout << "value none\nstructure none\n";
  }
  std::cout << "status "
            << csg::to_string(r.complete    ? csg::RunStatus::kComplete
                              : has_answer ? csg::RunStatus::kTimeout
                                           : csg::RunStatus::kIncomplete)
            << "\n";
  print_stats(std::cout, r.stats);
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> models;
  int n_min = 1;
  int n_max = 9;
  int seeds = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> variants;
  std::vector<std::string> games = {"table"};
  bool inject_bound_fault = false;
};

int run_verify(const VerifyArgs& args) {
  csg::VerifyConfig config;
  if (!args.models.empty()) {
    config.models = parse_list<csg::GraphModel>(
        args.models, [](const std::string& s) { return csg::parse_graph_model(s); });
  }
  if (!args.variants.empty()) {
    config.variants = parse_list<csg::Variant>(
        args.variants, [](const std::string& s) { return csg::parse_variant(s); });
  }
  config.game_kinds = parse_list<csg::GameKind>(
      args.games, [](const std::string& s) { return csg::parse_game_kind(s); });
  if (args.n_min < 1 || args.n_max < args.n_min ||
      args.n_max > csg::kDefaultOracleCap) {
    throw UsageError("n range must lie within [1, " +
                     std::to_string(csg::kDefaultOracleCap) + "]");
  }
  config.min_agents = args.n_min;
  config.max_agents = args.n_max;
  config.seeds = args.seeds;
  config.first_seed = args.seed;
  config.flip_bound_sign = args.inject_bound_fault;

  const csg::VerifyReport report = csg::run_verify(config, &std::cout);
  std::cout << (report.ok() ? "PASS" : "FAIL") << " instances="
            << report.instances << " runs=" << report.runs
            << " failures=" << report.failures.size()
            << " audited_tables=" << report.audited_tables
            << " guard_fallbacks=" << report.guard_fallbacks << "\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

struct BenchArgs {
  std::vector<std::string> instances;
  std::vector<std::string> variants = {"dype", "tsp:none", "dype-star",
                                       "d-tsp:interleaved", "cfss"};
  int repetitions = 1;
  std::optional<long> budget_ms;
  std::string out;
  std::string trace_dir;
};

int run_bench(const BenchArgs& args) {
  csg::BenchConfig config;
  config.variants = parse_list<csg::Variant>(
      args.variants, [](const std::string& s) { return csg::parse_variant(s); });
  config.repetitions = args.repetitions;
  if (args.budget_ms) config.budget = std::chrono::milliseconds(*args.budget_ms);
  if (!args.trace_dir.empty()) config.trace_dir = args.trace_dir;
  for (const std::string& path : args.instances) {
    config.instances.push_back(
        {std::filesystem::path(path).stem().string(), load_instance(path)});
  }

  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) throw UsageError("cannot write " + args.out);
  }
  csg::BenchReport report;
  try {
    report = csg::run_bench(config);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const csg::InstanceError*>(&e) != nullptr) throw;
    throw UsageError(e.what());
  }
  csg::write_bench_csv(args.out.empty() ? std::cout : file, report);
  for (const std::string& id : report.inconsistent_instances()) {
    std::cerr << "inconsistent best values for instance " << id << "\n";
  }
  return report.inconsistent_instances().empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalition structure generation on graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--model", gen.model,
                      "path, cycle, star, complete or gnp:<p>");
  gen_cmd->add_option("--n", gen.n, "Number of agents")
      ->check(CLI::Range(1, csg::kMaxAgents));
  gen_cmd->add_option("--game", gen.game, "table or supersub");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--root", gen.root, "Pinned pseudotree root");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("instance", solve.instance, "Instance file or -")
      ->required();
  solve_cmd->add_option("--algorithm", solve.algorithm,
                        "oracle, dype, tsp, dype-star, d-tsp or cfss, "
                        "optionally qualified as in tsp:supersub");
  solve_cmd->add_option("--bound", solve.bound, "none or supersub");
  solve_cmd->add_option("--mode", solve.mode, "interleaved or parallel");
  solve_cmd->add_option("--trace", solve.trace, "Anytime trace CSV");
  solve_cmd->add_option("--budget", solve.budget_ms, "Time budget in ms")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--seed", solve.seed,
                        "Random worker schedule for interleaved d-tsp");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Compare every solver with the oracle");
  verify_cmd->add_option("--models", verify.models, "Graph models");
  verify_cmd->add_option("--n-min", verify.n_min, "Smallest agent count");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest agent count");
  verify_cmd->add_option("--seeds", verify.seeds, "Games per (model, n)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify.seed, "First seed");
  verify_cmd->add_option("--algorithm", verify.variants,
                         "Variants, for example tsp:supersub");
  verify_cmd->add_option("--games", verify.games, "table and/or supersub");
  verify_cmd->add_flag("--inject-bound-fault", verify.inject_bound_fault,
                       "Negate the tsp bound (the run must fail)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark sweep");
  bench_cmd->add_option("instances", bench.instances, "Instance files")
      ->required();
  bench_cmd->add_option("--algorithm", bench.variants, "Variants to run");
  bench_cmd->add_option("--repetitions", bench.repetitions, "Runs per pair")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--budget", bench.budget_ms, "Per-run budget in ms")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("-o,--out", bench.out, "Report CSV (default stdout)");
  bench_cmd->add_option("--trace-dir", bench.trace_dir,
                        "Directory for per-run trace CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const csg::InstanceError& e) {
    std::cerr << "instance error: " << e.what() << "\n";
    return kExitInstance;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInstance;
  }
  return kExitUsage;
}
