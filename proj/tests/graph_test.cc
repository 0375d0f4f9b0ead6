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
#include <random>
#include <set>
#include <sstream>

#include "csg/connected_subsets.h"
#include "csg/graph.h"
#include "doctest.h"
#include "oracles.h"

namespace csg {
namespace {

// The 4-cycle a1-a2-a3-a4-a1, 0-based.
Graph four_cycle() { return Graph(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}}); }

Graph from_raw(int n, const oracle::EdgeList& edges) {
  return Graph(n, std::span<const Edge>(edges.data(), edges.size()));
}

std::vector<oracle::Mask> masks(std::vector<AgentSet> sets) {
  std::vector<oracle::Mask> out;
  for (AgentSet s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("AgentSet basics") {
  const AgentSet s = AgentSet::of({0, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.lowest() == 0);
  CHECK(s.agents() == std::vector<Agent>{0, 2, 5});
  CHECK((s - AgentSet::single(0)).lowest() == 2);
  CHECK(AgentSet::first(3) == AgentSet::of({0, 1, 2}));
  CHECK(AgentSet::of({2}).subset_of(s));
  CHECK_FALSE(s.intersects(AgentSet::of({1, 3})));
  CHECK(AgentSet::first(kMaxAgents).size() == kMaxAgents);
  std::ostringstream out;
  out << s;
  CHECK(out.str() == "{0,2,5}");
}

TEST_CASE("Graph rejects bad input and collapses duplicates") {
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(kMaxAgents + 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  const Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.adjacent(1, 0));
  CHECK(g.neighbors(1) == AgentSet::of({0, 2}));
}

TEST_CASE("connectivity helpers") {
  const Graph g = four_cycle();
  CHECK(is_connected(g, g.agents()));
  CHECK(is_connected(g, AgentSet()));
  CHECK(is_connected(g, AgentSet::of({3})));
  CHECK_FALSE(is_connected(g, AgentSet::of({0, 2})));
  CHECK(is_connected(g, AgentSet::of({0, 1, 2})));
  CHECK(connected_components(g, AgentSet::of({0, 2})) ==
        std::vector<AgentSet>{AgentSet::of({0}), AgentSet::of({2})});
  CHECK(g.neighborhood(AgentSet::of({0})) == AgentSet::of({1, 3}));
  CHECK(reachable(g, AgentSet::of({0}), AgentSet::of({0, 1, 2})) ==
        AgentSet::of({0, 1, 2}));
  CHECK(reachable(g, AgentSet::of({0}), AgentSet::of({0, 2})) ==
        AgentSet::of({0}));

  const Graph two(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(connected_components(two, two.agents()) ==
        std::vector<AgentSet>{AgentSet::of({0, 1, 2}), AgentSet::of({3, 4, 5})});
  const Graph tri = two.induced(AgentSet::of({3, 4, 5}));
  CHECK(tri.num_agents() == 3);
  CHECK(tri.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("four-cycle has 13 connected subsets") {
  const Graph g = four_cycle();
  const auto subsets = connected_subsets(g, {g.agents(), {}, {}});
  CHECK(subsets.size() == 13);
  CHECK(std::set<AgentSet>(subsets.begin(), subsets.end()).size() == 13);
}

TEST_CASE("required {a1,a3} on the four-cycle gives 3 subsets") {
  const Graph g = four_cycle();
  const auto subsets =
      connected_subsets(g, {g.agents(), AgentSet::of({0, 2}), {}});
  CHECK(masks(subsets) ==
        std::vector<oracle::Mask>{0b0111, 0b1101, 0b1111});
}

TEST_CASE("required agents outside the allowed ground yield nothing") {
  const Graph g = four_cycle();
  CHECK(connected_subsets(g, {g.agents(), AgentSet::of({1}),
                              AgentSet::of({1})})
            .empty());
  CHECK(connected_subsets(g, {AgentSet::of({0, 2}), AgentSet::of({3}), {}})
            .empty());
}

TEST_CASE("enumerator matches the filter on random graphs and queries") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto edges = oracle::random_edges(n, 0.4, rng);
    const Graph g = from_raw(n, edges);
    const oracle::Mask all = (oracle::Mask{1} << n) - 1;
    const oracle::Mask ground = (rng() & all) | (trial % 3 == 0 ? all : 0);
    const oracle::Mask required = (trial % 2 == 0) ? 0 : (rng() & rng() & all);
    const oracle::Mask forbidden = (trial % 5 == 0) ? (rng() & rng() & all) : 0;
    const auto got = connected_subsets(
        g, {AgentSet(ground), AgentSet(required), AgentSet(forbidden)});
    CHECK(std::set<AgentSet>(got.begin(), got.end()).size() == got.size());
    CHECK(masks(got) ==
          oracle::connected_subsets(n, edges, ground, required, forbidden));
  }
}

TEST_CASE("enumeration stops when the callback returns false") {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  int seen = 0;
  const bool finished =
      for_each_connected_subset(g, {g.agents(), {}, {}}, [&](AgentSet) {
        return ++seen < 4;
      });
  CHECK_FALSE(finished);
  CHECK(seen == 4);
}

}  // namespace
}  // namespace csg
