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
#include <fstream>
#include <map>
#include <stdexcept>

#include "csg/harness.h"

namespace csg {

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kComplete: return "complete";
    case RunStatus::kTimeout: return "timeout";
    case RunStatus::kIncomplete: return "incomplete";
  }
  return "?";
}

std::vector<std::string> BenchReport::inconsistent_instances() const {
  std::map<std::string, std::vector<Value>> seen;
  for (const BenchRow& row : rows) {
    if (row.status == RunStatus::kComplete && row.best_value) {
      seen[row.instance].push_back(*row.best_value);
    }
  }
  std::vector<std::string> out;
  for (const auto& [id, values] : seen) {
    if (std::adjacent_find(values.begin(), values.end(),
                           std::not_equal_to<>()) != values.end()) {
      out.push_back(id);
    }
  }
  return out;
}

namespace {

std::string trace_file_name(const BenchRow& row) {
  std::string variant = row.variant;
  std::replace(variant.begin(), variant.end(), ':', '_');
  return row.instance + "." + variant + "." + std::to_string(row.repetition) +
         ".csv";
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  if (config.trace_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*config.trace_dir, ec);
    if (ec) {
      throw std::runtime_error("cannot create " + config.trace_dir->string() +
                               ": " + ec.message());
    }
  }
  BenchReport report;
  for (const BenchInstance& bi : config.instances) {
    for (const Variant& v : config.variants) {
      for (int rep = 0; rep < config.repetitions; ++rep) {
        SolveRequest request;
        request.variant = v;
        const auto start = Clock::now();
        if (config.budget) request.deadline = start + *config.budget;
        const SolverResult r = solve_instance(bi.instance, request);
        const auto wall = std::chrono::duration_cast<std::chrono::microseconds>(
            Clock::now() - start);

        BenchRow row;
        row.instance = bi.id;
        row.variant = v.name();
        row.repetition = rep;
        row.wall_us = wall.count();
        row.stats = r.stats;
        row.trace = r.trace;
        if (r.complete) {
          row.status = RunStatus::kComplete;
          row.best_value = r.best_value;
        } else if (is_anytime(v.algorithm) && !r.best.blocks.empty()) {
          row.status = RunStatus::kTimeout;
          row.best_value = r.best_value;
        } else {
          row.status = RunStatus::kIncomplete;
        }
        if (config.trace_dir) {
          const auto path = *config.trace_dir / trace_file_name(row);
          std::ofstream out(path);
          if (!out) throw std::runtime_error("cannot write " + path.string());
          write_trace_csv(out, row.trace);
          if (!out) throw std::runtime_error("write failed for " + path.string());
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "instance,algorithm,repetition,status,best_value,wall_us,subsets,"
         "dp_entries,nodes_expanded,nodes_pruned\n";
  for (const BenchRow& row : report.rows) {
    out << row.instance << ',' << row.variant << ',' << row.repetition << ','
        << to_string(row.status) << ',';
    if (row.best_value) out << *row.best_value;
    out << ',' << row.wall_us << ',' << row.stats.subsets_enumerated << ','
        << row.stats.dp_entries << ',' << row.stats.nodes_expanded << ','
        << row.stats.nodes_pruned << '\n';
  }
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace) {
  std::vector<TracePoint> points;
  for (const TracePoint& p : trace) {
    if (!points.empty() && p.elapsed <= points.back().elapsed) {
      points.back().value = std::max(points.back().value, p.value);
    } else {
      points.push_back(p);
    }
  }
  out << "elapsed_us,value\n";
  for (const TracePoint& p : points) {
    out << p.elapsed.count() << ',' << p.value << '\n';
  }
}

}  // namespace csg
