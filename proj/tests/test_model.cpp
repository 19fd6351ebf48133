#include <random>

#include "doctest.h"
#include "sr/model.hpp"
#include "sr/oracle.hpp"
#include "testutil.hpp"

using namespace sr;
using namespace srtest;

TEST_CASE("rank is zero-based and tie-collapsing") {
  const Profile left = fig1_left();
  CHECK(rank_of(left, 0, 1) == 0);  // rank_1(2) = 0
  CHECK(rank_of(left, 0, 2) == 1);  // rank_1(3) = 1

  const Profile mid = fig1_middle();
  CHECK(rank_of(mid, 2, 3) == 2);  // rank_3(4) = 2, agents 1,2 tied ahead
  CHECK(rank_of(mid, 2, 0) == 0);
  CHECK(rank_of(mid, 2, 1) == 0);

  // Most-preferred singleton always ranks zero.
  CHECK(rank_of(left, 1, 2) == 0);
  CHECK(rank_of(left, 3, 0) == 0);

  // Bottom argument prices the whole list.
  CHECK(rank_of(left, 0, kNoAgent) == 3);
  CHECK(rank_of(mid, 1, kNoAgent) == 2);

  CHECK_THROWS_AS(rank_of(left, 1, 3), std::invalid_argument);  // 4 not acceptable to 2

  for (AgentId a = 0; a < mid.agent_count(); ++a)
    for (AgentId b : mid.lists[static_cast<std::size_t>(a)].flat())
      CHECK(rank_of(mid, a, b) <
            static_cast<int>(mid.lists[static_cast<std::size_t>(a)].length()));
}

TEST_CASE("is_blocking matches the definition") {
  const Profile right = fig1_right();
  const Matching m = mk(right, {{0, 1}, {2, 3}});
  CHECK(is_blocking(right, m, 1, 2));  // {2,3} blocks

  const Profile left = fig1_left();
  const Matching s = mk(left, {{0, 1}, {2, 3}});
  for (const auto& [u, v] : left.edges())
    if (!s.contains(u, v)) CHECK_FALSE(is_blocking(left, s, u, v));

  // Rank-0 partners on both sides never block.
  const Matching t = mk(left, {{0, 1}});  // 1-2: rank_1(2)=0, rank_2(1)=? 1
  CHECK_FALSE(is_blocking(left, t, 0, 3));

  CHECK_THROWS_AS(is_blocking(left, s, 0, 1), std::invalid_argument);  // already matched
  CHECK_THROWS_AS(is_blocking(left, s, 1, 3), std::invalid_argument);  // not acceptable
}

TEST_CASE("blocking_pairs enumerates exactly the blockers") {
  const Profile left = fig1_left();
  CHECK(blocking_pairs(left, mk(left, {{0, 1}, {2, 3}})).empty());

  const Profile right = fig1_right();
  CHECK_FALSE(blocking_pairs(right, mk(right, {{0, 1}, {2, 3}})).empty());
  CHECK_FALSE(blocking_pairs(right, mk(right, {{0, 2}, {1, 3}})).empty());
  CHECK_FALSE(blocking_pairs(right, mk(right, {{0, 3}, {1, 2}})).empty());

  // On an empty matching every pair of mutually-top agents blocks.
  const auto bp = blocking_pairs(left, Matching(4));
  CHECK(std::find(bp.begin(), bp.end(), std::make_pair(0, 1)) != bp.end());
}

TEST_CASE("stability and perfection") {
  const Profile mid = fig1_middle();
  const Matching m1 = mk(mid, {{0, 2}});
  const Matching m2 = mk(mid, {{0, 1}, {2, 3}});
  CHECK(is_stable(mid, m1));
  CHECK_FALSE(is_perfect(mid, m1));
  CHECK(is_stable(mid, m2));
  CHECK(is_perfect(mid, m2));
  CHECK_FALSE(is_stable(mid, Matching(4)));
}

TEST_CASE("egalitarian cost under the three semantics") {
  const Profile mid = fig1_middle();
  const Matching m1 = mk(mid, {{0, 2}});
  const Matching m2 = mk(mid, {{0, 1}, {2, 3}});
  CHECK(egalitarian_cost(mid, m1, CostSemantics::list_length()) == 4);
  CHECK(egalitarian_cost(mid, m2, CostSemantics::list_length()) == 2);
  CHECK(egalitarian_cost(mid, m1, CostSemantics::zero()) == 0);
  CHECK(egalitarian_cost(mid, m1, CostSemantics::constant_cost(3)) == 6);
  CHECK_THROWS_AS(CostSemantics::constant_cost(0), std::invalid_argument);
}

TEST_CASE("blocking agents") {
  const Profile left = fig1_left();
  CHECK(blocking_agents(left, mk(left, {{0, 1}, {2, 3}})).empty());

  const Profile right = fig1_right();
  const auto agents = blocking_agents(right, mk(right, {{0, 1}, {2, 3}}));
  CHECK(std::find(agents.begin(), agents.end(), 1) != agents.end());
  CHECK(std::find(agents.begin(), agents.end(), 2) != agents.end());

  const Profile pair = make_profile({{{1}}, {{0}}});
  const auto both = blocking_agents(pair, Matching(2));
  CHECK(both == std::vector<AgentId>{0, 1});
}

TEST_CASE("validator rejects malformed profiles") {
  // Asymmetric acceptability.
  CHECK_THROWS_AS(make_profile({{{1}}, {{0}}, {{0}}}), std::invalid_argument);
  // Empty list.
  CHECK_THROWS_AS(make_profile({{{1}}, {{0}}, {}}), std::invalid_argument);
  // Self-reference.
  CHECK_THROWS_AS(make_profile({{{0}}, {{0}}}), std::invalid_argument);
  // Duplicate entry.
  CHECK_THROWS_AS(make_profile({{{1}, {1}}, {{0}}}), std::invalid_argument);
}

TEST_CASE("complete profiles: stable implies perfect (n <= 8)") {
  std::mt19937_64 rng(12021);
  for (int it = 0; it < 60; ++it) {
    std::uniform_int_distribution<int> nd(1, 4);
    const int n = 2 * nd(rng);
    std::vector<std::vector<std::vector<AgentId>>> groups(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      std::vector<AgentId> others;
      for (int v = 0; v < n; ++v)
        if (v != u) others.push_back(v);
      std::shuffle(others.begin(), others.end(), rng);
      for (AgentId v : others) groups[static_cast<std::size_t>(u)].push_back({v});
    }
    const Profile p = make_profile(std::move(groups));
    for (const auto& m : all_stable_matchings(p, {8, 30}))
      CHECK(is_perfect(p, m));
  }
}

TEST_CASE("cost identities across semantics") {
  std::mt19937_64 rng(5150);
  for (int it = 0; it < 80; ++it) {
    const Profile p = random_tiefree(rng, 7, 12);
    std::vector<Matching> some;
    for_each_matching(p, {10, 12}, [&](const Matching& m) {
      some.push_back(m);
      return some.size() > 40;
    });
    for (const auto& m : some) {
      int unmatched = 0;
      for (AgentId a = 0; a < p.agent_count(); ++a)
        if (!m.matched(a)) ++unmatched;
      const long long zero = egalitarian_cost(p, m, CostSemantics::zero());
      CHECK(egalitarian_cost(p, m, CostSemantics::constant_cost(3)) == zero + 3 * unmatched);
      if (is_perfect(p, m))
        CHECK(egalitarian_cost(p, m, CostSemantics::list_length()) == zero);
    }
  }
}
