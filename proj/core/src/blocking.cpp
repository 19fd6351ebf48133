#include "sr/blocking.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sr/phase1.hpp"

namespace sr {

namespace {

using Edge = std::pair<AgentId, AgentId>;

Edge norm(AgentId x, AgentId y) { return x < y ? Edge{x, y} : Edge{y, x}; }

// The residual enumeration walks the phase-1 structure: fixed pairs are
// forced, marked pairs and marked agents are excluded, and every unmarked
// agent must be matched. Partial assignments are pruned as soon as two
// settled agents form a blocking pair.
struct StableEnum {
  const Profile& profile;
  std::vector<std::vector<AgentId>> pref;  // residual strict lists
  std::vector<std::vector<int>> rank;      // residual adjacency (-1 absent)
  Phase1Result p0;
  std::vector<AgentId> open;  // unmarked agents not in fixed pairs, ascending
  const std::function<bool(const Matching&)>& visit;
  bool stopped = false;

  StableEnum(const Profile& p, const std::vector<Edge>& banned,
             const std::function<bool(const Matching&)>& v)
      : profile(p), visit(v) {
    const int n = p.agent_count();
    std::set<Edge> gone(banned.begin(), banned.end());
    pref.resize(static_cast<std::size_t>(n));
    rank.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (AgentId a = 0; a < n; ++a) {
      for (AgentId b : p.lists[static_cast<std::size_t>(a)].flat()) {
        if (gone.count(norm(a, b))) continue;
        rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            static_cast<int>(pref[static_cast<std::size_t>(a)].size());
        pref[static_cast<std::size_t>(a)].push_back(b);
      }
    }
    p0 = run_phase1_lists(pref);
    for (AgentId a : p0.unmarked_agents)
      if (!p0.agent_fixed(a)) open.push_back(a);
  }

  bool acceptable(AgentId a, AgentId b) const {
    return rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 0;
  }
  bool prefers(AgentId a, AgentId b, AgentId over) const {
    return rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] <
           rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(over)];
  }

  // Would matching u with v create a blocking pair whose status is already
  // final? Final states: matched agents keep their partner; marked agents
  // stay unmatched forever.
  bool immediately_blocked(const Matching& m, AgentId u, AgentId v) const {
    const AgentId pair_agents[2] = {u, v};
    for (int side = 0; side < 2; ++side) {
      const AgentId x = pair_agents[side];
      const AgentId mate = pair_agents[1 - side];
      for (AgentId w : pref[static_cast<std::size_t>(x)]) {
        if (w == mate) break;  // entries past the mate are not preferred
        // x prefers w to its new mate; does w prefer x back, irrevocably?
        if (m.matched(w)) {
          if (prefers(w, x, m.partner(w))) return true;
        } else if (!p0.pair_marked(x, w) &&
                   std::find(p0.marked_agents.begin(), p0.marked_agents.end(), w) !=
                       p0.marked_agents.end()) {
          return true;  // w is permanently unmatched and always prefers x
        }
      }
    }
    return false;
  }

  bool stable_residual(const Matching& m) const {
    const int n = profile.agent_count();
    for (AgentId a = 0; a < n; ++a)
      for (AgentId b : pref[static_cast<std::size_t>(a)]) {
        if (a > b || m.contains(a, b)) continue;
        const bool a_wants = !m.matched(a) || prefers(a, b, m.partner(a));
        const bool b_wants = !m.matched(b) || prefers(b, a, m.partner(b));
        if (a_wants && b_wants) return false;
      }
    return true;
  }

  void rec(Matching& m, std::size_t next_open) {
    if (stopped) return;
    while (next_open < open.size() && m.matched(open[next_open])) ++next_open;
    if (next_open == open.size()) {
      if (stable_residual(m) && visit(m)) stopped = true;
      return;
    }
    const AgentId u = open[next_open];
    for (AgentId v : pref[static_cast<std::size_t>(u)]) {
      if (m.matched(v) || p0.pair_marked(u, v)) continue;
      if (immediately_blocked(m, u, v)) continue;
      m.add(u, v);
      rec(m, next_open + 1);
      m.remove(u, v);
      if (stopped) return;
    }
  }

  void run() {
    Matching m(profile.agent_count());
    for (const auto& [x, y] : p0.fixed_pairs) m.add(x, y);
    rec(m, 0);
  }
};

}  // namespace

void for_each_stable_tiefree(const Profile& profile, const std::vector<Edge>& banned,
                             const std::function<bool(const Matching&)>& visit) {
  if (profile.has_ties())
    throw std::invalid_argument("stable enumeration requires a tie-free profile");
  StableEnum e(profile, banned, visit);
  e.run();
}

std::vector<Matching> enumerate_stable_tiefree(const Profile& profile,
                                               const std::vector<Edge>& banned) {
  std::vector<Matching> out;
  for_each_stable_tiefree(profile, banned, [&out](const Matching& m) {
    out.push_back(m);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Matching> exact_blocking_set_feasible(const Profile& profile,
                                                    const std::vector<Edge>& target) {
  if (profile.has_ties())
    throw std::invalid_argument("blocking-set feasibility requires a tie-free profile");
  std::vector<Edge> wanted;
  for (const auto& [x, y] : target) {
    if (!profile.acceptable(x, y) || !profile.acceptable(y, x))
      throw std::invalid_argument("target pair {" + profile.name(x) + "," + profile.name(y) +
                                  "} is not an acceptability edge");
    wanted.push_back(norm(x, y));
  }
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  std::optional<Matching> found;
  for_each_stable_tiefree(profile, wanted, [&](const Matching& m) {
    for (const auto& [x, y] : wanted)
      if (!is_blocking(profile, m, x, y)) return false;
    if (blocking_pairs(profile, m) != wanted)
      throw std::logic_error("feasibility produced a mismatched blocking set");
    found = m;
    return true;
  });
  return found;
}

namespace {

template <typename Fn>
bool combinations(int n, int size, Fn&& fn) {  // fn(indices) -> stop?
  std::vector<int> idx;
  auto rec = [&](auto&& self, int from, int want) -> bool {
    if (want == 0) return fn(idx);
    for (int x = from; x <= n - want; ++x) {
      idx.push_back(x);
      if (self(self, x + 1, want - 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  return rec(rec, 0, size);
}

BlockingCertificate certify(const Profile& profile, const Matching& m) {
  BlockingCertificate cert;
  cert.matching = m;
  cert.pairs = blocking_pairs(profile, m);
  cert.agents = blocking_agents(profile, m);
  return cert;
}

}  // namespace

std::optional<BlockingCertificate> min_blocking_pairs(const Profile& profile, int max_pairs) {
  if (profile.has_ties())
    throw std::invalid_argument("min-blocking-pairs requires a tie-free profile");
  const auto edges = profile.edges();
  const int m = static_cast<int>(edges.size());
  for (int size = 0; size <= max_pairs; ++size) {
    std::optional<BlockingCertificate> cert;
    combinations(m, size, [&](const std::vector<int>& idx) {
      std::vector<Edge> target;
      for (int i : idx) target.push_back(edges[static_cast<std::size_t>(i)]);
      auto found = exact_blocking_set_feasible(profile, target);
      if (!found) return false;
      cert = certify(profile, *found);
      return true;
    });
    if (cert) return cert;
  }
  return std::nullopt;
}

std::optional<BlockingCertificate> min_blocking_agents(const Profile& profile, int max_agents) {
  if (profile.has_ties())
    throw std::invalid_argument("min-blocking-agents requires a tie-free profile");
  const int n = profile.agent_count();
  for (int ba = 0; ba <= max_agents; ++ba) {
    std::optional<BlockingCertificate> cert;
    combinations(n, ba, [&](const std::vector<int>& agents) {
      // Edges inside the guessed agent set, then every nonempty choice of
      // blocking pairs among them (empty only for the ba = 0 guess).
      std::vector<Edge> inside;
      for (std::size_t i = 0; i < agents.size(); ++i)
        for (std::size_t j = i + 1; j < agents.size(); ++j)
          if (profile.acceptable(agents[i], agents[j])) inside.push_back(norm(agents[i], agents[j]));
      std::sort(inside.begin(), inside.end());
      const int e = static_cast<int>(inside.size());
      for (int size = ba == 0 ? 0 : 1; size <= e; ++size) {
        const bool stop = combinations(e, size, [&](const std::vector<int>& pick) {
          std::vector<Edge> target;
          for (int i : pick) target.push_back(inside[static_cast<std::size_t>(i)]);
          auto found = exact_blocking_set_feasible(profile, target);
          if (!found) return false;
          auto candidate = certify(profile, *found);
          if (static_cast<int>(candidate.agents.size()) > ba) return false;
          cert = std::move(candidate);
          return true;
        });
        if (stop) return true;
      }
      return false;
    });
    if (cert) return cert;
  }
  return std::nullopt;
}

}  // namespace sr
