#include "sr/oracle.hpp"

#include <algorithm>
#include <string>

namespace sr {

namespace {

void check_limits(const Profile& profile, const OracleLimits& limits) {
  if (profile.agent_count() > limits.max_agents)
    throw CapacityError("oracle refuses " + std::to_string(profile.agent_count()) +
                        " agents (limit " + std::to_string(limits.max_agents) + ")");
  const auto edges = profile.edges();
  if (static_cast<int>(edges.size()) > limits.max_edges)
    throw CapacityError("oracle refuses " + std::to_string(edges.size()) + " edges (limit " +
                        std::to_string(limits.max_edges) + ")");
}

}  // namespace

void for_each_matching(const Profile& profile, const OracleLimits& limits,
                       const std::function<bool(const Matching&)>& visit) {
  check_limits(profile, limits);
  const int n = profile.agent_count();
  Matching m(n);
  bool stopped = false;
  // Settle agents in id order: the lowest undecided agent either stays
  // unmatched or pairs with a later, still-free acceptable agent. Every
  // matching appears exactly once.
  auto rec = [&](auto&& self, AgentId a) -> void {
    if (stopped) return;
    while (a < n && m.matched(a)) ++a;
    if (a == n) {
      if (visit(m)) stopped = true;
      return;
    }
    for (AgentId b : profile.lists[static_cast<std::size_t>(a)].flat()) {
      if (b < a || m.matched(b)) continue;
      m.add(a, b);
      self(self, a + 1);
      m.remove(a, b);
      if (stopped) return;
    }
    self(self, a + 1);  // a stays unmatched
  };
  rec(rec, 0);
}

std::vector<Matching> all_stable_matchings(const Profile& profile, const OracleLimits& limits) {
  std::vector<Matching> out;
  for_each_matching(profile, limits, [&](const Matching& m) {
    if (is_stable(profile, m)) out.push_back(m);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<EgalSolution> opt_egal_brute(const Profile& profile, const CostSemantics& semantics,
                                           const OracleLimits& limits) {
  std::optional<EgalSolution> best;
  for_each_matching(profile, limits, [&](const Matching& m) {
    if (!is_stable(profile, m)) return false;
    const long long cost = egalitarian_cost(profile, m, semantics);
    if (!best || cost < best->cost || (cost == best->cost && m < best->matching))
      best = EgalSolution{m, cost};
    return false;
  });
  return best;
}

namespace {

std::pair<Matching, int> minimize(const Profile& profile, const OracleLimits& limits,
                                  const std::function<int(const Matching&)>& value) {
  std::optional<std::pair<Matching, int>> best;
  for_each_matching(profile, limits, [&](const Matching& m) {
    const int v = value(m);
    if (!best || v < best->second || (v == best->second && m < best->first)) best = {m, v};
    return false;
  });
  return *best;  // the empty matching always exists
}

}  // namespace

std::pair<Matching, int> min_bp_brute(const Profile& profile, const OracleLimits& limits) {
  return minimize(profile, limits, [&](const Matching& m) {
    return static_cast<int>(blocking_pairs(profile, m).size());
  });
}

std::pair<Matching, int> min_ba_brute(const Profile& profile, const OracleLimits& limits) {
  return minimize(profile, limits, [&](const Matching& m) {
    return static_cast<int>(blocking_agents(profile, m).size());
  });
}

}  // namespace sr
