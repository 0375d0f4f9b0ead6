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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "csg/connected_subsets.h"
#include "csg/harness.h"
#include "oracles.h"

namespace csg {
namespace {

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what();
  }
};

bool report(int id, const std::string& title, const Tally& t,
            double seconds) {
  const bool ok = t.failures == 0 && t.checks > 0;
  std::printf("%s criterion %d: %s (%llu checks, %llu failures, %.1fs)\n",
              ok ? "PASS" : "FAIL", id, title.c_str(),
              static_cast<unsigned long long>(t.checks),
              static_cast<unsigned long long>(t.failures), seconds);
  if (!ok && !t.first_failure.empty()) {
    std::printf("  first failure: %s\n", t.first_failure.c_str());
  }
  std::fflush(stdout);
  return ok;
}

oracle::EdgeList raw_edges(const Graph& g) {
  return oracle::EdgeList(g.edges().begin(), g.edges().end());
}

Graph from_raw(int n, const oracle::EdgeList& edges) {
  return Graph(n, std::span<const Edge>(edges.data(), edges.size()));
}

std::string where(const GraphModel& m, int n, std::uint64_t seed,
                  const std::string& variant) {
  std::ostringstream out;
  out << variant << " on " << m.name() << " n=" << n << " seed=" << seed;
  return out.str();
}

bool trace_ok(const SolverResult& r, Value start, Value optimum) {
  if (r.trace.empty() || r.trace.front().value != start ||
      r.trace.back().value != optimum) {
    return false;
  }
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    if (r.trace[i].value < r.trace[i - 1].value) return false;
  }
  return true;
}

// Criteria 1, 6, 7 and 8 share one sweep over the matrix.
struct MatrixTallies {
  Tally equivalence, anytime, crossing, audit;
};

MatrixTallies run_matrix() {
  MatrixTallies t;
  for (const GraphModel& model : default_graph_models()) {
    for (int n = 1; n <= 9; ++n) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Instance inst = gen_instance(model, n, {}, seed);
        const Graph g = inst.graph();
        const Game game = inst.make_game();
        const Value optimum = brute_force_best(game, g).best_value;
        const Value reference = oracle::optimum(
            n, raw_edges(g), [&](oracle::Mask m) { return game.value(AgentSet(m)); });
        t.equivalence.check(optimum == reference, [&] {
          return where(model, n, seed, "oracle") + " disagrees with the subset DP";
        });
        const Value v_all = game.value(g.agents());

        for (const Variant& v : default_variants()) {
          SolveRequest request;
          request.variant = v;
          request.keep_table = v.algorithm == Algorithm::kDype ||
                               v.algorithm == Algorithm::kDypeStar;
          const SolverResult r = run_variant(game, g, inst.root, request);
          const std::string name = v.name();
          t.equivalence.check(
              r.complete && r.best_value == optimum &&
                  is_coalition_structure(r.best, g.agents()) &&
                  is_feasible(g, r.best) &&
                  partition_value(game, r.best) == r.best_value,
              [&] {
                return where(model, n, seed, name) + ": got " +
                       std::to_string(r.best_value) + ", oracle " +
                       std::to_string(optimum);
              });
          if (v.algorithm == Algorithm::kDypeStar ||
              v.algorithm == Algorithm::kDtsp) {
            t.anytime.check(trace_ok(r, v_all, optimum), [&] {
              return where(model, n, seed, name) + ": bad trace";
            });
          }
          if (v.algorithm == Algorithm::kDtsp) {
            t.crossing.check(r.stats.frontiers_crossed, [&] {
              return where(model, n, seed, name) + ": frontiers never crossed";
            });
            t.crossing.check(r.stats.guard_fallbacks == 0, [&] {
              return where(model, n, seed, name) + ": " +
                     std::to_string(r.stats.guard_fallbacks) +
                     " guard fallbacks";
            });
          }
          if (request.keep_table) {
            const auto violations = audit_dp_table(game, g, *r.table);
            t.audit.check(violations.empty(), [&] {
              return where(model, n, seed, name) + ": " + violations.front();
            });
            t.audit.check(r.table->find(g.agents()) != nullptr, [&] {
              return where(model, n, seed, name) + ": no entry for A";
            });
          }
        }
      }
    }
  }
  return t;
}

// Connected graphs on n agents, one per isomorphism class. Grows classes one
// edge at a time; the canonical form is the smallest edge mask over the
// relabellings that list agents by nondecreasing degree.
std::vector<std::vector<Edge>> connected_graph_classes(int n) {
  std::vector<Edge> pairs;
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pair_index[i][j] = pair_index[j][i] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  }
  auto canonical = [&](std::uint64_t mask) {
    std::vector<int> degree(n, 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) ++degree[pairs[e].first], ++degree[pairs[e].second];
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return degree[a] < degree[b]; });
    std::uint64_t best = ~std::uint64_t{0};
    // Permute within runs of equal degree only.
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        std::vector<int> label(n);
        for (int k = 0; k < n; ++k) label[order[k]] = k;
        std::uint64_t out = 0;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
          if ((mask >> e) & 1U) {
            out |= std::uint64_t{1}
                   << pair_index[label[pairs[e].first]][label[pairs[e].second]];
          }
        }
        best = std::min(best, out);
        return;
      }
      int end = i;
      while (end < n && degree[order[end]] == degree[order[i]]) ++end;
      std::sort(order.begin() + i, order.begin() + end);
      do {
        rec(end);
      } while (std::next_permutation(order.begin() + i, order.begin() + end));
    };
    rec(0);
    return best;
  };

  std::set<std::uint64_t> level{canonical(0)};
  std::vector<std::vector<Edge>> out;
  while (!level.empty()) {
    std::set<std::uint64_t> next;
    for (std::uint64_t mask : level) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) edges.push_back(pairs[e]);
      }
      const Graph g(n, edges);
      if (is_connected(g, g.agents())) out.push_back(edges);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (!((mask >> e) & 1U)) next.insert(canonical(mask | (std::uint64_t{1} << e)));
      }
    }
    level = std::move(next);
  }
  return out;
}

// Structures visited by the unpruned tree searches, against the enumerator.
void check_coverage(const Graph& g, Tally& t, const std::string& label) {
  const Game game = make_random_table_game(g.num_agents(), 10, 1);
  const std::uint64_t total = enumerate_feasible_structures(g).size();
  const Pseudotree pt = build_pseudotree(g);

  std::vector<Partition> seen;
  SolveOptions options;
  options.on_structure = [&](const Partition& p) {
    seen.push_back(p.canonical());
  };
  tsp(game, g, pt, make_tsp_bound(game, BoundKind::kNone), options);
  std::set<std::vector<AgentSet>> keys;
  for (const Partition& p : seen) keys.insert(p.blocks);
  const bool no_repeats = keys.size() == seen.size();
  keys.insert(Partition{{g.agents()}}.blocks);
  keys.insert(singletons(g.agents()).canonical().blocks);
  t.check(no_repeats && keys.size() == total, [&] {
    return label + ": tsp covered " + std::to_string(keys.size()) + " of " +
           std::to_string(total);
  });

  std::set<std::vector<AgentSet>> cfss_keys;
  std::uint64_t cfss_count = 0;
  options.on_structure = [&](const Partition& p) {
    ++cfss_count;
    cfss_keys.insert(p.canonical().blocks);
  };
  cfss(game, g, make_cfss_bound(game, BoundKind::kNone), options);
  t.check(cfss_count == total && cfss_keys.size() == total, [&] {
    return label + ": cfss visited " + std::to_string(cfss_count) + " of " +
           std::to_string(total);
  });
}

Tally run_coverage() {
  Tally t;
  const Graph four_cycle(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}});
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  t.check(enumerate_feasible_structures(four_cycle).size() == 12,
          [] { return std::string("four-cycle count is not 12"); });
  t.check(enumerate_feasible_structures(k4).size() == oracle::bell(4) &&
              oracle::bell(4) == 15,
          [] { return std::string("K4 count is not 15"); });
  check_coverage(four_cycle, t, "four-cycle");
  check_coverage(k4, t, "K4");

  // Every labelled connected graph up to six agents.
  for (int n = 1; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
         ++mask) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) edges.push_back(pairs[e]);
      }
      const Graph g(n, edges);
      if (!is_connected(g, g.agents())) continue;
      const std::uint64_t total = enumerate_feasible_structures(g).size();
      const std::uint64_t want =
          oracle::feasible_partitions(n, raw_edges(g)).size();
      t.check(total == want, [&] {
        return "n=" + std::to_string(n) + " edge mask " +
               std::to_string(mask) + ": enumerator disagrees with filter";
      });
      check_coverage(g, t, "n=" + std::to_string(n) + " edge mask " +
                               std::to_string(mask));
    }
  }
  // Seven agents: one representative of every isomorphism class, each under
  // a few random relabellings so the pseudotree order varies too.
  const auto classes = connected_graph_classes(7);
  t.check(classes.size() == 853, [&] {
    return "expected 853 connected graphs on 7 agents up to isomorphism, got " +
           std::to_string(classes.size());
  });
  std::mt19937_64 rng(2024);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    for (int r = 0; r < 3; ++r) {
      std::vector<Edge> edges;
      for (auto [u, v] : classes[c]) edges.emplace_back(perm[u], perm[v]);
      const Graph g(7, edges);
      const std::string label =
          "n=7 class " + std::to_string(c) + " relabelling " + std::to_string(r);
      t.check(enumerate_feasible_structures(g).size() ==
                  oracle::feasible_partitions(7, raw_edges(g)).size(),
              [&] { return label + ": enumerator disagrees with filter"; });
      check_coverage(g, t, label);
      std::shuffle(perm.begin(), perm.end(), rng);
    }
  }
  return t;
}

Tally run_enumerator() {
  Tally t;
  const Graph four_cycle(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}});
  t.check(connected_subsets(four_cycle, {four_cycle.agents(), {}, {}}).size() ==
              13,
          [] { return std::string("four-cycle does not give 13 subsets"); });

  std::mt19937_64 rng(99);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto edges = oracle::random_edges(n, 0.15 + 0.7 * (trial % 5) / 4.0,
                                              rng);
      const Graph g = from_raw(n, edges);
      const oracle::Mask all = (oracle::Mask{1} << n) - 1;
      auto compare = [&](oracle::Mask ground, oracle::Mask required,
                         oracle::Mask forbidden) {
        std::vector<oracle::Mask> got;
        for_each_connected_subset(
            g, {AgentSet(ground), AgentSet(required), AgentSet(forbidden)},
            [&](AgentSet s) { got.push_back(s.bits()); });
        std::sort(got.begin(), got.end());
        const bool unique =
            std::adjacent_find(got.begin(), got.end()) == got.end();
        t.check(unique && got == oracle::connected_subsets(n, edges, ground,
                                                          required, forbidden),
                [&] {
                  return "n=" + std::to_string(n) + " trial " +
                         std::to_string(trial) + " ground " +
                         std::to_string(ground) + " required " +
                         std::to_string(required) + " forbidden " +
                         std::to_string(forbidden);
                });
      };
      compare(all, 0, 0);
      // Every required set, and every forbidden set, over the full ground.
      for (oracle::Mask m = 1; m <= all; ++m) {
        compare(all, m, 0);
        compare(all, 0, m);
      }
      for (int q = 0; q < 20; ++q) {
        compare(rng() & all, rng() & rng() & all, rng() & rng() & all);
      }
    }
  }
  return t;
}

// Largest structure value over the contraction subtree rooted at `s`; checks
// the bound at every node on the way.
Value subtree_max(const Game& game, const ContractedState& s, Tally& t,
                  const std::string& label) {
  Value best = partition_value(game, s.partition());
  for (const ContractedState& child : s.children()) {
    best = std::max(best, subtree_max(game, child, t, label));
  }
  const std::vector<AgentSet> merged = s.merged();
  const Value bound = upper_bound_cfss(game, s.blocks(), merged);
  t.check(best <= bound, [&] {
    return label + ": contraction bound " + std::to_string(bound) +
           " below subtree value " + std::to_string(best);
  });
  return best;
}

void check_bounds(const Graph& g, const Game& game, Tally& t,
                  const std::string& label) {
  // Tree-search form: every feasible structure against every partial
  // partition made of some of its blocks.
  for_each_feasible_structure(g, [&](const Partition& p) {
    const Value total = partition_value(game, p);
    const std::size_t k = p.blocks.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
      Partition partial;
      for (std::size_t b = 0; b < k; ++b) {
        if ((pick >> b) & 1U) partial.blocks.push_back(p.blocks[b]);
      }
      const Value bound =
          upper_bound_tsp(game, partial, g.agents() - partial.covered());
      t.check(total <= bound, [&] {
        return label + ": tree bound " + std::to_string(bound) +
               " below extension value " + std::to_string(total);
      });
    }
  });
  subtree_max(game, ContractedState::root(g), t, label);
}

Tally run_bounds() {
  Tally t;
  std::mt19937_64 rng(4242);
  for (int n = 1; n <= 7; ++n) {
    // Every isomorphism class, each with a few random split games.
    const auto classes = connected_graph_classes(n);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const Graph g(n, classes[c]);
      for (int r = 0; r < 3; ++r) {
        const Game game = make_supersub_game(n, 1 + r * 9, 2 + r * 6, rng());
        check_bounds(g, game, t,
                     "n=" + std::to_string(n) + " class " + std::to_string(c) +
                         " game " + std::to_string(r));
      }
    }
    // Random labelled graphs with a wider spread of weights and costs.
    for (int trial = 0; trial < 120; ++trial) {
      const auto edges =
          oracle::random_connected_edges(n, (trial % 6) / 5.0, rng);
      const Graph g = from_raw(n, edges);
      const Game game = make_supersub_game(n, 1 + trial % 20, trial % 15, rng());
      check_bounds(g, game, t,
                   "n=" + std::to_string(n) + " trial " + std::to_string(trial));
    }
  }
  return t;
}

Tally run_pseudotrees() {
  Tally t;
  {
    const Graph g(5, {{2, 0}, {2, 3}, {0, 1}, {3, 4}, {2, 1}});
    const Pseudotree pt = build_pseudotree(g, 2);
    t.check(std::vector<Agent>(pt.order().begin(), pt.order().end()) ==
                std::vector<Agent>{2, 0, 3, 1, 4},
            [] { return std::string("example order is not (a3,a1,a4,a2,a5)"); });
    t.check(pt.at(1) == 2, [] { return std::string("b_1 is not a3"); });
    t.check(pt.at(4) == 1, [] { return std::string("b_4 is not a2"); });
  }
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto edges =
        oracle::random_connected_edges(n, (trial % 8) / 10.0, rng);
    const Graph g = from_raw(n, edges);
    const Agent root = static_cast<Agent>(rng() % n);
    const Pseudotree pt = build_pseudotree(g, root);
    const std::string label = "trial " + std::to_string(trial);
    for (auto [u, v] : g.edges()) {
      t.check(pt.is_ancestor(u, v) || pt.is_ancestor(v, u), [&] {
        return label + ": edge joins two branches";
      });
    }
    for (int i = 2; i <= n; ++i) {
      t.check(pt.depth(pt.at(i - 1)) <= pt.depth(pt.at(i)), [&] {
        return label + ": breadth-first layering broken at " + std::to_string(i);
      });
      const Agent p = *pt.parent(pt.at(i));
      t.check(pt.position(p) < i && pt.depth(p) + 1 == pt.depth(pt.at(i)),
              [&] { return label + ": parent placement"; });
    }
    t.check(pt.at(1) == root, [&] { return label + ": root not first"; });
  }
  return t;
}

}  // namespace
}  // namespace csg

int main() {
  using Clock = std::chrono::steady_clock;
  auto seconds_since = [](Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
  };
  bool ok = true;

  const auto start = Clock::now();
  const csg::MatrixTallies matrix = csg::run_matrix();
  const double matrix_s = seconds_since(start);

  ok &= csg::report(1, "oracle equivalence over the model x n x seed matrix",
                    matrix.equivalence, matrix_s);
  auto timed = [&](auto&& run) {
    const auto t0 = Clock::now();
    csg::Tally tally = run();
    return std::make_pair(tally, seconds_since(t0));
  };
  const auto coverage = timed(csg::run_coverage);
  ok &= csg::report(2, "exactly-once coverage of feasible structures",
                    coverage.first, coverage.second);
  const auto enumerator = timed(csg::run_enumerator);
  ok &= csg::report(3, "connected-subset enumerator against the filter",
                    enumerator.first, enumerator.second);
  const auto bounds = timed(csg::run_bounds);
  ok &= csg::report(4, "bound admissibility", bounds.first, bounds.second);
  const auto pseudotrees = timed(csg::run_pseudotrees);
  ok &= csg::report(5, "pseudotree branch property and ordering",
                    pseudotrees.first, pseudotrees.second);
  ok &= csg::report(6, "anytime traces", matrix.anytime, matrix_s);
  ok &= csg::report(7, "d-tsp frontier crossing and guard", matrix.crossing,
                    matrix_s);
  ok &= csg::report(8, "dp table recurrence audit", matrix.audit, matrix_s);
  return ok ? 0 : 1;
}
