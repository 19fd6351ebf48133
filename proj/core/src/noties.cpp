#include "sr/noties.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "sr/phase1.hpp"

namespace sr {

namespace {

long long fixed_and_marked_charge(const Profile& profile, const Phase1Result& p0) {
  long long charge = 0;
  for (const auto& [x, y] : p0.fixed_pairs) {
    charge += rank_of(profile, x, y);
    charge += rank_of(profile, y, x);
  }
  for (AgentId x : p0.marked_agents)
    charge += static_cast<long long>(profile.lists[static_cast<std::size_t>(x)].length());
  return charge;
}

}  // namespace

KernelOutcome kernelize(const Profile& profile, long long gamma) {
  if (profile.has_ties()) throw std::invalid_argument("kernelization requires a tie-free profile");
  if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");

  const Phase1Result p0 = run_phase1(profile);
  if (phase1_no_instance(profile, p0, gamma)) return KernelOutcome::no();

  std::vector<char> in_fixed(static_cast<std::size_t>(profile.agent_count()), 0);
  for (const auto& [x, y] : p0.fixed_pairs) in_fixed[static_cast<std::size_t>(x)] = in_fixed[static_cast<std::size_t>(y)] = 1;
  std::vector<char> is_marked_agent(static_cast<std::size_t>(profile.agent_count()), 0);
  for (AgentId x : p0.marked_agents) is_marked_agent[static_cast<std::size_t>(x)] = 1;

  const long long gamma_hat = gamma - fixed_and_marked_charge(profile, p0);

  std::vector<AgentId> survivors;  // unmarked agents outside fixed pairs
  for (AgentId x : p0.unmarked_agents)
    if (!in_fixed[static_cast<std::size_t>(x)]) survivors.push_back(x);

  if (gamma_hat < static_cast<long long>(survivors.size())) return KernelOutcome::no();

  // Ordered pairs (x, y): x unmarked ranks y beyond the updated budget.
  std::vector<std::pair<AgentId, AgentId>> over_budget;
  std::set<std::pair<AgentId, AgentId>> over_budget_set;
  for (AgentId x : p0.unmarked_agents) {
    const auto flat = profile.lists[static_cast<std::size_t>(x)].flat();
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (static_cast<long long>(i) > gamma_hat) {
        over_budget.emplace_back(x, flat[i]);
        over_budget_set.emplace(x, flat[i]);
      }
    }
  }
  std::sort(over_budget.begin(), over_budget.end());

  // An agent that every stable matching must match, but whose every usable
  // partner exceeds the budget, makes the instance a no-instance. Without
  // this guard such an agent would keep a dummies-only list in the kernel and
  // could be left unmatched there at a cheaper price than in the original.
  for (AgentId a : survivors) {
    const auto flat = profile.lists[static_cast<std::size_t>(a)].flat();
    bool viable = false;
    for (std::size_t i = 0; i < flat.size() && static_cast<long long>(i) <= gamma_hat; ++i) {
      const AgentId y = flat[i];
      if (p0.pair_marked(a, y)) continue;
      if (in_fixed[static_cast<std::size_t>(y)] || is_marked_agent[static_cast<std::size_t>(y)]) continue;
      if (over_budget_set.count({y, a})) continue;
      viable = true;
      break;
    }
    if (!viable) return KernelOutcome::no();
  }

  // Dummy pool: d_1..d_k pair with d_{k+1}..d_{2k} at cost zero.
  const long long k = (gamma_hat + 1) / 2;
  const int dummy_count = static_cast<int>(2 * k);

  std::vector<AgentId> to_kernel(static_cast<std::size_t>(profile.agent_count()), kNoAgent);
  Kernel kernel;
  kernel.gamma_hat = gamma_hat;
  kernel.over_budget_pairs = over_budget;
  for (AgentId a : survivors) {
    to_kernel[static_cast<std::size_t>(a)] = static_cast<AgentId>(kernel.origin.size());
    kernel.origin.push_back(a);
  }
  const int first_dummy = static_cast<int>(survivors.size());
  for (int j = 0; j < dummy_count; ++j) {
    kernel.dummy_ids.push_back(first_dummy + j);
    kernel.origin.push_back(kNoAgent);
  }

  const int kn = first_dummy + dummy_count;
  std::vector<std::vector<std::vector<AgentId>>> groups(static_cast<std::size_t>(kn));
  std::vector<std::string> names(static_cast<std::size_t>(kn));
  std::set<std::string> used_names;
  for (AgentId a : survivors) {
    names[static_cast<std::size_t>(to_kernel[static_cast<std::size_t>(a)])] = profile.name(a);
    used_names.insert(profile.name(a));
  }
  for (int j = 0; j < dummy_count; ++j) {
    std::string dn = "d" + std::to_string(j + 1);
    while (used_names.count(dn)) dn += "_";
    used_names.insert(dn);
    names[static_cast<std::size_t>(first_dummy + j)] = dn;
  }

  // Dummy lists start with the fixed partner; survivors get appended below.
  for (int j = 0; j < static_cast<int>(k); ++j) {
    groups[static_cast<std::size_t>(first_dummy + j)].push_back({first_dummy + static_cast<int>(k) + j});
    groups[static_cast<std::size_t>(first_dummy + static_cast<int>(k) + j)].push_back({first_dummy + j});
  }

  for (AgentId a : survivors) {
    auto& own = groups[static_cast<std::size_t>(to_kernel[static_cast<std::size_t>(a)])];
    const auto flat = profile.lists[static_cast<std::size_t>(a)].flat();
    int next_dummy = 0;
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (static_cast<long long>(i) > gamma_hat) break;
      const AgentId x = flat[i];
      const bool replace = in_fixed[static_cast<std::size_t>(x)] || is_marked_agent[static_cast<std::size_t>(x)] ||
                           over_budget_set.count({x, a}) != 0;
      if (replace) {
        assert(next_dummy < dummy_count);
        const AgentId d = first_dummy + next_dummy++;
        own.push_back({d});
        groups[static_cast<std::size_t>(d)].push_back({to_kernel[static_cast<std::size_t>(a)]});
      } else {
        own.push_back({to_kernel[static_cast<std::size_t>(x)]});
      }
    }
  }

  kernel.profile = make_profile(std::move(groups), std::move(names));

  assert(kernel.profile.agent_count() <= 2 * kernel.gamma_hat + 1);
  for (const auto& list : kernel.profile.lists)
    assert(static_cast<long long>(list.length()) <= kernel.gamma_hat + 1);

  KernelOutcome out;
  out.trivial_no = false;
  out.kernel = std::move(kernel);
  return out;
}

namespace {

struct BranchContext {
  const Profile& profile;
  const Phase1Result& p0;
  std::vector<AgentId> open;  // unmarked agents outside fixed pairs, ascending
  std::vector<char> in_open;
  long long base_cost = 0;  // charge of fixed pairs and marked agents
  std::optional<EgalSolution> best;
  BranchStats* stats = nullptr;

  void search(Matching& m, long long spent, long long budget);
};

void BranchContext::search(Matching& m, long long spent, long long budget) {
  if (stats) ++stats->nodes;
  AgentId u = kNoAgent;
  for (AgentId cand : open) {
    if (!m.matched(cand)) {
      u = cand;
      break;
    }
  }
  if (u == kNoAgent) {
    if (!is_stable(profile, m)) return;
    const long long cost = base_cost + spent;
    if (!best || cost < best->cost || (cost == best->cost && m < best->matching))
      best = EgalSolution{m, cost};
    return;
  }

  struct Candidate {
    int cost;
    AgentId v;
  };
  std::vector<Candidate> cands;
  for (AgentId v : profile.lists[static_cast<std::size_t>(u)].flat()) {
    if (!in_open[static_cast<std::size_t>(v)] || m.matched(v)) continue;
    if (p0.pair_marked(u, v)) continue;
    const int pair_cost = rank_of(profile, u, v) + rank_of(profile, v, u);
    if (pair_cost > budget) continue;
    cands.push_back({pair_cost, v});
  }
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.cost != b.cost ? a.cost < b.cost : a.v < b.v; });
  for (const auto& c : cands) {
    if (stats) {
      ++stats->explored_pairs;
      if (c.cost > budget) stats->budget_respected = false;
    }
    m.add(u, c.v);
    search(m, spent + c.cost, budget - c.cost);
    m.remove(u, c.v);
  }
}

}  // namespace

std::optional<EgalSolution> solve_egal_noties(const Profile& profile, long long gamma,
                                              BranchStats* stats) {
  if (profile.has_ties()) throw std::invalid_argument("branching solver requires a tie-free profile");
  if (gamma < 0) return std::nullopt;

  const Phase1Result p0 = run_phase1(profile);
  if (phase1_no_instance(profile, p0, gamma)) return std::nullopt;

  const long long base = fixed_and_marked_charge(profile, p0);
  const long long gamma_hat = gamma - base;
  if (gamma_hat < 0) return std::nullopt;

  Matching m(profile.agent_count());
  for (const auto& [x, y] : p0.fixed_pairs) m.add(x, y);

  BranchContext ctx{profile, p0, {}, {}, base, std::nullopt, stats};
  ctx.in_open.assign(static_cast<std::size_t>(profile.agent_count()), 0);
  for (AgentId x : p0.unmarked_agents) {
    if (!p0.agent_fixed(x)) {
      ctx.open.push_back(x);
      ctx.in_open[static_cast<std::size_t>(x)] = 1;
    }
  }
  ctx.search(m, 0, gamma_hat);
  return ctx.best;
}

}  // namespace sr
