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

#include <sstream>

#include "csg/bounds.h"
#include "csg/game.h"
#include "csg/partition.h"
#include "doctest.h"

namespace csg {
namespace {

Game additive(const std::vector<Value>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<Value> values;
  for (AgentSet::Mask m = 1; m < (AgentSet::Mask{1} << n); ++m) {
    Value v = 0;
    for (Agent a : AgentSet(m)) v += w[a];
    values.push_back(v);
  }
  return Game::table(n, values);
}

TEST_CASE("tabulated game lookup") {
  const Game g = additive({1, 2, 3});
  CHECK(g.value(AgentSet::of({0, 2})) == 4);
  CHECK(g.value(AgentSet::of({0, 1, 2})) == 6);
  CHECK(g.value(AgentSet()) == 0);
  CHECK(coalition_value(g, AgentSet::of({1})) == 2);
  CHECK_FALSE(g.is_decomposed());
  CHECK_THROWS_AS(g.sup_value(AgentSet::of({0})), std::logic_error);
  CHECK_THROWS_AS(g.sub_value(AgentSet::of({0})), std::logic_error);
  CHECK_THROWS_AS(Game::table(2, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Game::table(kMaxTableAgents + 1, {}), std::invalid_argument);
}

TEST_CASE("super/subadditive split") {
  const Game g = Game::supersub({1, 1}, 0);
  CHECK(g.value(AgentSet::of({0})) == 1);
  CHECK(g.value(AgentSet::of({0, 1})) == 4);
  CHECK(g.is_decomposed());
  CHECK(g.is_super_subadditive());

  const Game h = Game::supersub({3, 1, 2}, 1);
  CHECK(h.sup_value(AgentSet::of({0, 2})) == 10);
  CHECK(h.sub_value(AgentSet::of({0, 2})) == -4);
  CHECK(h.value(AgentSet::of({0, 1, 2})) == 9);
  CHECK_THROWS_AS(Game::supersub({1, -1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(Game::supersub({1, 1}, -2), std::invalid_argument);
}

TEST_CASE("restriction relabels in ascending order") {
  const Game g = additive({1, 2, 3, 4});
  const Game r = g.restricted_to(AgentSet::of({1, 3}));
  CHECK(r.num_agents() == 2);
  CHECK(r.value(AgentSet::of({0})) == 2);
  CHECK(r.value(AgentSet::of({1})) == 4);
  CHECK(r.value(AgentSet::of({0, 1})) == 6);

  const Game s = Game::supersub({3, 1, 2}, 1).restricted_to(AgentSet::of({0, 2}));
  CHECK(s.value(AgentSet::of({0, 1})) == 6);
}

TEST_CASE("random generators stay in range and are deterministic") {
  const Game a = make_random_table_game(5, 100, 42);
  const Game b = make_random_table_game(5, 100, 42);
  CHECK(a.as_table()->values == b.as_table()->values);
  for (AgentSet::Mask m = 1; m < 32; ++m) {
    const Value v = a.value(AgentSet(m));
    CHECK(v >= 0);
    CHECK(v <= 100 * AgentSet(m).size());
  }
  const Game s = make_supersub_game(6, 10, 5, 3);
  CHECK(s.as_supersub()->weights.size() == 6);
  for (Value w : s.as_supersub()->weights) CHECK((w >= 0 && w <= 10));
  CHECK((s.as_supersub()->cost_factor >= 0 && s.as_supersub()->cost_factor <= 5));
}

TEST_CASE("generated split games are super- and subadditive") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Game g = make_supersub_game(n, 10, 10, seed * 31 + n);
      const AgentSet::Mask all = (AgentSet::Mask{1} << n) - 1;
      for (AgentSet::Mask c = 1; c <= all; ++c) {
        CHECK(g.value(AgentSet(c)) ==
              g.sup_value(AgentSet(c)) + g.sub_value(AgentSet(c)));
        // Every nonempty d disjoint from c.
        const AgentSet::Mask rest = all & ~c;
        for (AgentSet::Mask d = rest; d != 0; d = (d - 1) & rest) {
          const AgentSet a(c), b(d), u(c | d);
          CHECK(g.sup_value(u) >= g.sup_value(a) + g.sup_value(b));
          CHECK(g.sub_value(u) <= g.sub_value(a) + g.sub_value(b));
        }
      }
    }
  }
}

TEST_CASE("partition value is additive over disjoint unions") {
  const Game game = make_random_table_game(6, 50, 2);
  const Partition p{{AgentSet::of({0, 4}), AgentSet::of({2})}};
  const Partition q{{AgentSet::of({1, 3}), AgentSet::of({5})}};
  Partition both = p;
  both.blocks.insert(both.blocks.end(), q.blocks.begin(), q.blocks.end());
  CHECK(partition_value(game, both) ==
        partition_value(game, p) + partition_value(game, q));
}

TEST_CASE("partition helpers") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  const Game game = additive({1, 2, 3, 4});
  const Partition p{{AgentSet::of({2, 3}), AgentSet::of({0, 1})}};
  CHECK(partition_value(game, p) == 10);
  CHECK(partition_value(game, Partition{}) == 0);
  CHECK(is_coalition_structure(p, g.agents()));
  CHECK(is_feasible(g, p));
  CHECK(p.canonical().blocks.front() == AgentSet::of({0, 1}));
  CHECK_FALSE(is_feasible(g, Partition{{AgentSet::of({0, 2}),
                                        AgentSet::of({1, 3})}}));
  CHECK_FALSE(is_coalition_structure(Partition{{AgentSet::of({0, 1}),
                                                AgentSet::of({1, 2, 3})}},
                                     g.agents()));
  CHECK_FALSE(is_coalition_structure(Partition{{AgentSet::of({0, 1})}},
                                     g.agents()));
  CHECK(singletons(AgentSet::of({1, 3})).blocks ==
        std::vector<AgentSet>{AgentSet::of({1}), AgentSet::of({3})});
  std::ostringstream out;
  out << p;
  CHECK(out.str() == "{{0,1} {2,3}}");
}

TEST_CASE("tree-search bound") {
  const Game g = Game::supersub({3, 1, 2}, 1);
  // Nothing placed: v_sup(A) + three singleton costs = 18 - 3.
  CHECK(upper_bound_tsp(g, Partition{}, g.agents()) == 15);
  // {a1} placed (worth 2), remainder {a2,a3}: 2 + 3*2 - 2.
  CHECK(upper_bound_tsp(g, Partition{{AgentSet::of({0})}},
                        AgentSet::of({1, 2})) == 6);
  CHECK_THROWS_AS(upper_bound_tsp(make_random_table_game(3, 5, 1),
                                  Partition{}, AgentSet::first(3)),
                  std::invalid_argument);
}

TEST_CASE("contraction bound") {
  const Game g = Game::supersub({3, 1, 2}, 1);
  const std::vector<AgentSet> blocks{AgentSet::of({0}), AgentSet::of({1}),
                                     AgentSet::of({2})};
  // V_sub(singletons) = -3, V_sup({A}) = 18.
  CHECK(upper_bound_cfss(g, blocks, std::vector<AgentSet>{g.agents()}) == 15);
  // Nothing mergeable: V_sub + V_sup of the same blocks = V.
  CHECK(upper_bound_cfss(g, Partition{blocks}, Partition{blocks}) == 3);
}

TEST_CASE("bound hooks") {
  const Game table = make_random_table_game(3, 5, 1);
  const Game split = Game::supersub({3, 1, 2}, 1);
  CHECK(make_tsp_bound(table, BoundKind::kSuperSub)(0, AgentSet::first(3)) ==
        kPlusInfinity);
  CHECK(make_tsp_bound(split, BoundKind::kNone)(0, AgentSet::first(3)) ==
        kPlusInfinity);
  CHECK(make_tsp_bound(split, BoundKind::kSuperSub)(0, AgentSet::first(3)) ==
        15);
  const std::vector<AgentSet> all{AgentSet::first(3)};
  CHECK(make_cfss_bound(table, BoundKind::kSuperSub)(all, all) == kPlusInfinity);
  CHECK(make_cfss_bound(split, BoundKind::kSuperSub)(all, all) == 9);
  CHECK(parse_bound_kind("supersub") == BoundKind::kSuperSub);
  CHECK(to_string(BoundKind::kNone) == "none");
  CHECK_THROWS_AS(parse_bound_kind("tight"), std::invalid_argument);
}

}  // namespace
}  // namespace csg
