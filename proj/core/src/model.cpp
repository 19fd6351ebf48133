#include "sr/model.hpp"

#include <algorithm>
#include <set>

namespace sr {

std::size_t PreferenceList::length() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

std::vector<AgentId> PreferenceList::flat() const {
  std::vector<AgentId> out;
  out.reserve(length());
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

bool PreferenceList::contains(AgentId who) const {
  for (const auto& g : groups)
    if (std::find(g.begin(), g.end(), who) != g.end()) return true;
  return false;
}

bool PreferenceList::has_tie() const {
  for (const auto& g : groups)
    if (g.size() > 1) return true;
  return false;
}

bool Profile::has_ties() const {
  for (const auto& l : lists)
    if (l.has_tie()) return true;
  return false;
}

bool Profile::acceptable(AgentId owner, AgentId target) const {
  return lists[static_cast<std::size_t>(owner)].contains(target);
}

std::vector<std::pair<AgentId, AgentId>> Profile::edges() const {
  std::vector<std::pair<AgentId, AgentId>> out;
  const int n = agent_count();
  for (AgentId u = 0; u < n; ++u)
    for (AgentId v : lists[static_cast<std::size_t>(u)].flat())
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

Profile make_profile(std::vector<std::vector<std::vector<AgentId>>> groups,
                     std::vector<std::string> names) {
  Profile p;
  p.lists.reserve(groups.size());
  for (auto& g : groups) {
    PreferenceList list;
    list.groups = std::move(g);
    for (auto& tie : list.groups) std::sort(tie.begin(), tie.end());
    p.lists.push_back(std::move(list));
  }
  if (names.empty()) {
    names.reserve(p.lists.size());
    for (std::size_t i = 0; i < p.lists.size(); ++i) names.push_back(std::to_string(i + 1));
  }
  if (names.size() != p.lists.size())
    throw std::invalid_argument("name count does not match agent count");
  p.names = std::move(names);
  validate_profile(p);
  return p;
}

void validate_profile(const Profile& profile) {
  const int n = profile.agent_count();
  for (AgentId a = 0; a < n; ++a) {
    const auto& list = profile.lists[static_cast<std::size_t>(a)];
    if (list.empty())
      throw std::invalid_argument("agent " + profile.name(a) + " has an empty preference list");
    std::set<AgentId> seen;
    for (const auto& g : list.groups) {
      if (g.empty())
        throw std::invalid_argument("agent " + profile.name(a) + " has an empty tie group");
      for (AgentId b : g) {
        if (b < 0 || b >= n)
          throw std::invalid_argument("agent " + profile.name(a) + " lists an unknown agent id");
        if (b == a)
          throw std::invalid_argument("agent " + profile.name(a) + " lists itself");
        if (!seen.insert(b).second)
          throw std::invalid_argument("agent " + profile.name(a) + " lists " + profile.name(b) +
                                      " twice");
      }
    }
  }
  for (AgentId a = 0; a < n; ++a)
    for (AgentId b : profile.lists[static_cast<std::size_t>(a)].flat())
      if (!profile.acceptable(b, a))
        throw std::invalid_argument("acceptability is not mutual between " + profile.name(a) +
                                    " and " + profile.name(b));
}

Matching Matching::from_pairs(int agent_count,
                              const std::vector<std::pair<AgentId, AgentId>>& pairs) {
  Matching m(agent_count);
  for (const auto& [x, y] : pairs) m.add(x, y);
  return m;
}

void Matching::add(AgentId x, AgentId y) {
  if (x == y) throw std::invalid_argument("cannot match an agent with itself");
  if (x < 0 || y < 0 || x >= agent_count() || y >= agent_count())
    throw std::invalid_argument("matching pair out of range");
  if (matched(x) || matched(y)) throw std::invalid_argument("agent already matched");
  partner_[static_cast<std::size_t>(x)] = y;
  partner_[static_cast<std::size_t>(y)] = x;
}

void Matching::remove(AgentId x, AgentId y) {
  if (!contains(x, y)) throw std::invalid_argument("pair not in matching");
  partner_[static_cast<std::size_t>(x)] = kNoAgent;
  partner_[static_cast<std::size_t>(y)] = kNoAgent;
}

std::size_t Matching::pair_count() const {
  std::size_t c = 0;
  for (AgentId p : partner_)
    if (p != kNoAgent) ++c;
  return c / 2;
}

std::vector<std::pair<AgentId, AgentId>> Matching::pairs() const {
  std::vector<std::pair<AgentId, AgentId>> out;
  for (AgentId x = 0; x < agent_count(); ++x) {
    AgentId y = partner(x);
    if (y != kNoAgent && x < y) out.emplace_back(x, y);
  }
  return out;
}

int rank_of(const Profile& profile, AgentId owner, AgentId target) {
  const auto& list = profile.lists[static_cast<std::size_t>(owner)];
  if (target == kNoAgent) return static_cast<int>(list.length());
  int ahead = 0;
  for (const auto& g : list.groups) {
    if (std::find(g.begin(), g.end(), target) != g.end()) return ahead;
    ahead += static_cast<int>(g.size());
  }
  throw std::invalid_argument("agent " + profile.name(target) + " is not acceptable to " +
                              profile.name(owner));
}

namespace {

// Core blocking predicate; preconditions already checked by the caller.
bool blocking_unchecked(const Profile& profile, const Matching& m, AgentId x, AgentId y) {
  const AgentId mx = m.partner(x);
  const AgentId my = m.partner(y);
  const bool x_wants = (mx == kNoAgent) || rank_of(profile, x, y) < rank_of(profile, x, mx);
  if (!x_wants) return false;
  return (my == kNoAgent) || rank_of(profile, y, x) < rank_of(profile, y, my);
}

}  // namespace

bool is_blocking(const Profile& profile, const Matching& m, AgentId x, AgentId y) {
  if (!profile.acceptable(x, y) || !profile.acceptable(y, x))
    throw std::invalid_argument("pair {" + profile.name(x) + "," + profile.name(y) +
                                "} is not mutually acceptable");
  if (m.contains(x, y))
    throw std::invalid_argument("pair {" + profile.name(x) + "," + profile.name(y) +
                                "} is already matched");
  return blocking_unchecked(profile, m, x, y);
}

std::vector<std::pair<AgentId, AgentId>> blocking_pairs(const Profile& profile, const Matching& m) {
  std::vector<std::pair<AgentId, AgentId>> out;
  for (const auto& [u, v] : profile.edges())
    if (!m.contains(u, v) && blocking_unchecked(profile, m, u, v)) out.emplace_back(u, v);
  return out;
}

bool is_stable(const Profile& profile, const Matching& m) {
  for (const auto& [u, v] : profile.edges())
    if (!m.contains(u, v) && blocking_unchecked(profile, m, u, v)) return false;
  return true;
}

bool is_perfect(const Profile& profile, const Matching& m) {
  for (AgentId a = 0; a < profile.agent_count(); ++a)
    if (!m.matched(a)) return false;
  return true;
}

std::vector<AgentId> blocking_agents(const Profile& profile, const Matching& m) {
  std::vector<char> hit(static_cast<std::size_t>(profile.agent_count()), 0);
  for (const auto& [u, v] : blocking_pairs(profile, m)) hit[u] = hit[v] = 1;
  std::vector<AgentId> out;
  for (AgentId a = 0; a < profile.agent_count(); ++a)
    if (hit[static_cast<std::size_t>(a)]) out.push_back(a);
  return out;
}

long long egalitarian_cost(const Profile& profile, const Matching& m,
                           const CostSemantics& semantics) {
  long long total = 0;
  for (AgentId a = 0; a < profile.agent_count(); ++a) {
    const AgentId p = m.partner(a);
    if (p != kNoAgent) {
      total += rank_of(profile, a, p);
      continue;
    }
    switch (semantics.kind) {
      case CostSemantics::Kind::ListLength:
        total += static_cast<long long>(profile.lists[static_cast<std::size_t>(a)].length());
        break;
      case CostSemantics::Kind::Zero:
        break;
      case CostSemantics::Kind::Constant:
        total += semantics.constant;
        break;
    }
  }
  return total;
}

void validate_matching(const Profile& profile, const Matching& m) {
  if (m.agent_count() != profile.agent_count())
    throw std::invalid_argument("matching size does not match profile");
  for (const auto& [u, v] : m.pairs())
    if (!profile.acceptable(u, v) || !profile.acceptable(v, u))
      throw std::invalid_argument("matched pair {" + profile.name(u) + "," + profile.name(v) +
                                  "} is not an acceptability edge");
}

}  // namespace sr
