#include "sr/phase1.hpp"

#include <algorithm>
#include <numeric>

namespace sr {

namespace {

Phase1Result marking_fixpoint(const std::vector<std::vector<AgentId>>& pref,
                              const std::vector<AgentId>& agent_order) {
  const int n = static_cast<int>(pref.size());

  Phase1Result res;
  res.marked.assign(static_cast<std::size_t>(n),
                    std::vector<char>(static_cast<std::size_t>(n), 0));

  auto mark = [&res](AgentId x, AgentId y) {
    res.marked[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    res.marked[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (AgentId u : agent_order) {
      // w: the first entry of u's list whose pair with u is still unmarked.
      AgentId w = kNoAgent;
      for (AgentId cand : pref[static_cast<std::size_t>(u)]) {
        if (!res.pair_marked(u, cand)) {
          w = cand;
          break;
        }
      }
      if (w == kNoAgent) continue;
      // u proposes to w: everyone w ranks strictly below u loses its pair with w.
      bool below = false;
      for (AgentId other : pref[static_cast<std::size_t>(w)]) {
        if (below && !res.pair_marked(other, w)) {
          mark(other, w);
          changed = true;
        }
        if (other == u) below = true;
      }
    }
  }

  res.first_unmarked.assign(static_cast<std::size_t>(n), kNoAgent);
  res.last_unmarked.assign(static_cast<std::size_t>(n), kNoAgent);
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b : pref[static_cast<std::size_t>(a)]) {
      if (res.pair_marked(a, b)) continue;
      if (res.first_unmarked[static_cast<std::size_t>(a)] == kNoAgent)
        res.first_unmarked[static_cast<std::size_t>(a)] = b;
      res.last_unmarked[static_cast<std::size_t>(a)] = b;
    }
    if (res.first_unmarked[static_cast<std::size_t>(a)] == kNoAgent)
      res.marked_agents.push_back(a);
    else
      res.unmarked_agents.push_back(a);
  }
  for (AgentId a = 0; a < n; ++a) {
    AgentId b = res.first_unmarked[static_cast<std::size_t>(a)];
    if (b != kNoAgent && a < b && res.first_unmarked[static_cast<std::size_t>(b)] == a)
      res.fixed_pairs.emplace_back(a, b);
  }
  std::sort(res.fixed_pairs.begin(), res.fixed_pairs.end());
  return res;
}

}  // namespace

bool Phase1Result::agent_fixed(AgentId x) const {
  for (const auto& [u, v] : fixed_pairs)
    if (u == x || v == x) return true;
  return false;
}

Phase1Result run_phase1(const Profile& profile) {
  std::vector<AgentId> order(static_cast<std::size_t>(profile.agent_count()));
  std::iota(order.begin(), order.end(), 0);
  return run_phase1(profile, order);
}

Phase1Result run_phase1(const Profile& profile, const std::vector<AgentId>& agent_order) {
  if (profile.has_ties()) throw std::invalid_argument("phase-1 requires a tie-free profile");
  std::vector<std::vector<AgentId>> pref(static_cast<std::size_t>(profile.agent_count()));
  for (AgentId a = 0; a < profile.agent_count(); ++a)
    pref[static_cast<std::size_t>(a)] = profile.lists[static_cast<std::size_t>(a)].flat();
  return marking_fixpoint(pref, agent_order);
}

Phase1Result run_phase1_lists(const std::vector<std::vector<AgentId>>& prefs) {
  std::vector<AgentId> order(prefs.size());
  std::iota(order.begin(), order.end(), 0);
  return marking_fixpoint(prefs, order);
}

bool phase1_no_instance(const Profile& profile, const Phase1Result& result, long long gamma) {
  if (static_cast<long long>(result.marked_agents.size()) > gamma) return true;
  for (AgentId x : result.unmarked_agents)
    if (rank_of(profile, x, result.first_unmarked[static_cast<std::size_t>(x)]) > gamma)
      return true;
  return false;
}

}  // namespace sr
