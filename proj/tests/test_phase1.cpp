#include <algorithm>
#include <random>

#include "doctest.h"
#include "sr/model.hpp"
#include "sr/oracle.hpp"
#include "sr/phase1.hpp"
#include "testutil.hpp"

using namespace sr;
using namespace srtest;

namespace {

// Proposition-1 style checks against the enumerated stable matchings.
void check_phase1_properties(const Profile& p, const OracleLimits& limits) {
  const Phase1Result r = run_phase1(p);
  const auto stables = all_stable_matchings(p, limits);

  for (AgentId x = 0; x < p.agent_count(); ++x) {
    const AgentId y = r.first_unmarked[static_cast<std::size_t>(x)];
    if (y != kNoAgent) CHECK(r.last_unmarked[static_cast<std::size_t>(y)] == x);
  }
  for (const auto& m : stables) {
    for (const auto& [x, y] : r.fixed_pairs) CHECK(m.contains(x, y));
    for (AgentId a : r.marked_agents) CHECK_FALSE(m.matched(a));
    for (AgentId a : r.unmarked_agents) CHECK(m.matched(a));
    for (const auto& [x, y] : m.pairs()) CHECK_FALSE(r.pair_marked(x, y));
  }
  // Marked pairs never block a matching made of unmarked pairs.
  for_each_matching(p, limits, [&](const Matching& m) {
    for (const auto& [x, y] : m.pairs())
      if (r.pair_marked(x, y)) return false;
    for (const auto& [x, y] : p.edges())
      if (r.pair_marked(x, y) && !m.contains(x, y)) CHECK_FALSE(is_blocking(p, m, x, y));
    return false;
  });
}

}  // namespace

TEST_CASE("ten-agent worked example: marks, fixed pair, stable costs") {
  const Profile p = example1();
  const Phase1Result r = run_phase1(p);

  CHECK(r.marked_agents == std::vector<AgentId>{3, 8});  // agents 4 and 9
  CHECK(r.fixed_pairs == std::vector<std::pair<AgentId, AgentId>>{{4, 9}});  // pair {5,10}

  // Marked entries per agent, exactly as in the worked profile.
  auto marked_row = [&](AgentId a) {
    std::vector<AgentId> out;
    for (AgentId b : p.lists[static_cast<std::size_t>(a)].flat())
      if (r.pair_marked(a, b)) out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(marked_row(0) == std::vector<AgentId>{1, 2, 3, 4, 7, 8, 9});
  CHECK(marked_row(1) == std::vector<AgentId>{0, 5});
  CHECK(marked_row(2) == std::vector<AgentId>{0, 6});
  CHECK(marked_row(5) == std::vector<AgentId>{1, 7});
  CHECK(marked_row(6) == std::vector<AgentId>{2});
  CHECK(marked_row(7) == std::vector<AgentId>{0, 5});

  const auto stables = all_stable_matchings(p, {10, 20});
  REQUIRE(stables.size() == 2);
  std::vector<long long> costs;
  for (const auto& m : stables) costs.push_back(egalitarian_cost(p, m));
  std::sort(costs.begin(), costs.end());
  CHECK(costs == std::vector<long long>{8, 10});
}

TEST_CASE("mutually-top pair is fixed with no marks") {
  const Profile p = make_profile({{{1}}, {{0}}});
  const Phase1Result r = run_phase1(p);
  CHECK(r.fixed_pairs == std::vector<std::pair<AgentId, AgentId>>{{0, 1}});
  CHECK(r.marked_agents.empty());
  for (AgentId a = 0; a < 2; ++a)
    for (AgentId b = 0; b < 2; ++b) CHECK_FALSE(r.marked[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
}

TEST_CASE("phase-1 properties on the figure and on random instances") {
  check_phase1_properties(fig1_left(), {10, 12});
  check_phase1_properties(fig1_right(), {10, 12});
  check_phase1_properties(example1(), {10, 20});
  std::mt19937_64 rng(777);
  for (int it = 0; it < 120; ++it) check_phase1_properties(random_tiefree(rng, 8, 12), {10, 12});
}

TEST_CASE("result is independent of the agent iteration order") {
  std::mt19937_64 rng(4242);
  for (int it = 0; it < 60; ++it) {
    const Profile p = random_tiefree(rng, 8, 12);
    const Phase1Result a = run_phase1(p);
    std::vector<AgentId> reversed(static_cast<std::size_t>(p.agent_count()));
    for (int i = 0; i < p.agent_count(); ++i)
      reversed[static_cast<std::size_t>(i)] = p.agent_count() - 1 - i;
    const Phase1Result b = run_phase1(p, reversed);
    CHECK(a.marked == b.marked);
    CHECK(a.fixed_pairs == b.fixed_pairs);
    CHECK(a.first_unmarked == b.first_unmarked);
    CHECK(a.last_unmarked == b.last_unmarked);
  }
}

TEST_CASE("early no-instance detection") {
  const Profile p = example1();
  const Phase1Result r = run_phase1(p);
  CHECK(phase1_no_instance(p, r, 1));        // two marked agents exceed gamma=1
  CHECK_FALSE(phase1_no_instance(p, r, 8));
  long long total = 0;
  for (const auto& l : p.lists) total += static_cast<long long>(l.length());
  CHECK_FALSE(phase1_no_instance(p, r, total));
}

TEST_CASE("ties are rejected") {
  CHECK_THROWS_AS(run_phase1(fig1_middle()), std::invalid_argument);
}
