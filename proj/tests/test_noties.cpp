#include <random>

#include "doctest.h"
#include "sr/model.hpp"
#include "sr/noties.hpp"
#include "sr/oracle.hpp"
#include "testutil.hpp"

using namespace sr;
using namespace srtest;

TEST_CASE("kernel golden values on the ten-agent example") {
  const Profile p = example1();
  const KernelOutcome out = kernelize(p, 8);
  REQUIRE_FALSE(out.trivial_no);
  const Kernel& k = *out.kernel;

  CHECK(k.gamma_hat == 6);
  CHECK(k.dummy_ids.size() == 6);
  CHECK(k.profile.agent_count() == 12);
  CHECK(k.profile.agent_count() <= 13);
  for (const auto& list : k.profile.lists) CHECK(list.length() <= 7);

  // Over-budget ordered pairs: agent 1 ranks 8 and 9 beyond gamma_hat.
  CHECK(k.over_budget_pairs ==
        std::vector<std::pair<AgentId, AgentId>>{{0, 7}, {0, 8}});

  // Surviving originals are 1,2,3,6,7,8; their lists mirror the worked kernel.
  auto kernel_id = [&](AgentId original) {
    for (std::size_t i = 0; i < k.origin.size(); ++i)
      if (k.origin[i] == original) return static_cast<AgentId>(i);
    FAIL("missing original agent");
    return kNoAgent;
  };
  auto is_dummy = [&](AgentId kid) { return k.origin[static_cast<std::size_t>(kid)] == kNoAgent; };

  const AgentId k1 = kernel_id(0);
  const auto list1 = k.profile.lists[static_cast<std::size_t>(k1)].flat();
  REQUIRE(list1.size() == 7);  // 6 2 7 d d 3 d
  CHECK(k.origin[static_cast<std::size_t>(list1[0])] == 5);
  CHECK(k.origin[static_cast<std::size_t>(list1[1])] == 1);
  CHECK(k.origin[static_cast<std::size_t>(list1[2])] == 6);
  CHECK(is_dummy(list1[3]));
  CHECK(is_dummy(list1[4]));
  CHECK(k.origin[static_cast<std::size_t>(list1[5])] == 2);
  CHECK(is_dummy(list1[6]));

  const AgentId k8 = kernel_id(7);
  const auto list8 = k.profile.lists[static_cast<std::size_t>(k8)].flat();
  REQUIRE(list8.size() == 5);  // 2 6 7 3 d
  CHECK(k.origin[static_cast<std::size_t>(list8[0])] == 1);
  CHECK(k.origin[static_cast<std::size_t>(list8[1])] == 5);
  CHECK(k.origin[static_cast<std::size_t>(list8[2])] == 6);
  CHECK(k.origin[static_cast<std::size_t>(list8[3])] == 2);
  CHECK(is_dummy(list8[4]));
  // Agents 1 and 8 share the same stand-in for their over-budget entries.
  CHECK(list8[4] == list1[3]);
}

TEST_CASE("kernel trivial-no cases") {
  CHECK(kernelize(example1(), 1).trivial_no);  // two marked agents

  // gamma+1 mutually-top pairs: everything fixed, kernel keeps only dummies.
  for (int gamma = 0; gamma <= 3; ++gamma) {
    std::vector<std::vector<std::vector<AgentId>>> groups;
    for (int i = 0; i <= gamma; ++i) {
      groups.push_back({{2 * i + 1}});
      groups.push_back({{2 * i}});
    }
    const KernelOutcome out = kernelize(make_profile(std::move(groups)), gamma);
    REQUIRE_FALSE(out.trivial_no);
    CHECK(out.kernel->gamma_hat == gamma);
    for (AgentId o : out.kernel->origin) CHECK(o == kNoAgent);
  }
}

TEST_CASE("kernel bounds and soundness against the oracle") {
  std::mt19937_64 rng(90125);
  int checked = 0;
  for (int it = 0; it < 150; ++it) {
    const Profile p = random_tiefree(rng, 8, 12);
    const auto stables = all_stable_matchings(p, {10, 12});
    for (long long gamma = 0; gamma <= 6; ++gamma) {
      bool original_yes = false;
      for (const auto& m : stables)
        original_yes |= egalitarian_cost(p, m) <= gamma;

      const KernelOutcome out = kernelize(p, gamma);
      bool kernel_yes = false;
      if (!out.trivial_no) {
        const Kernel& k = *out.kernel;
        CHECK(k.profile.agent_count() <= 2 * k.gamma_hat + 1);
        for (const auto& list : k.profile.lists)
          CHECK(static_cast<long long>(list.length()) <= k.gamma_hat + 1);
        for (const auto& m : all_stable_matchings(k.profile, {25, 100}))
          kernel_yes |= egalitarian_cost(k.profile, m) <= k.gamma_hat;
      }
      CHECK(kernel_yes == original_yes);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("branching solver golden values") {
  const Profile p = example1();
  const auto found = solve_egal_noties(p, 8);
  REQUIRE(found.has_value());
  CHECK(found->cost == 8);
  CHECK(found->matching ==
        mk(p, {{0, 6}, {1, 7}, {2, 5}, {4, 9}}));  // {1-7, 2-8, 3-6, 5-10}

  CHECK_FALSE(solve_egal_noties(p, 7).has_value());

  const auto left = solve_egal_noties(fig1_left(), 2);
  REQUIRE(left.has_value());
  CHECK(left->cost == 2);
}

TEST_CASE("branching solver agrees with the oracle and respects budgets") {
  std::mt19937_64 rng(112358);
  for (int it = 0; it < 200; ++it) {
    const Profile p = random_tiefree(rng, 8, 12);
    const auto opt = opt_egal_brute(p, CostSemantics::list_length(), {10, 12});
    for (long long gamma = 0; gamma <= 6; ++gamma) {
      BranchStats stats;
      const auto got = solve_egal_noties(p, gamma, &stats);
      CHECK(stats.budget_respected);
      if (opt && opt->cost <= gamma) {
        REQUIRE(got.has_value());
        CHECK(got->cost == opt->cost);
        CHECK(got->cost == egalitarian_cost(p, got->matching));
        CHECK(is_stable(p, got->matching));
      } else {
        CHECK_FALSE(got.has_value());
      }
    }
  }
}

TEST_CASE("solvers reject ties") {
  CHECK_THROWS_AS(kernelize(fig1_middle(), 3), std::invalid_argument);
  CHECK_THROWS_AS(solve_egal_noties(fig1_middle(), 3), std::invalid_argument);
}
