#include "sr/ties.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "sr/matching_engine.hpp"

namespace sr {

EdgeClassification classify_edges(const Profile& profile, long long gamma) {
  EdgeClassification out;
  for (const auto& [u, v] : profile.edges()) {
    const long long cost = edge_cost(profile, u, v);
    if (cost == 0)
      out.zero_edges.emplace_back(u, v);
    else if (cost <= gamma)
      out.costly_edges.emplace_back(u, v);
    else
      out.discarded.emplace_back(u, v);
  }
  return out;
}

long long edge_cost(const Profile& profile, AgentId u, AgentId v) {
  return static_cast<long long>(rank_of(profile, u, v)) + rank_of(profile, v, u);
}

namespace {

// Weakly preferred agents (excluding v itself) in u's list.
int weakly_above(const Profile& profile, AgentId u, AgentId v) {
  int count = 0;
  for (const auto& g : profile.lists[static_cast<std::size_t>(u)].groups) {
    if (std::find(g.begin(), g.end(), v) != g.end()) return count + static_cast<int>(g.size()) - 1;
    count += static_cast<int>(g.size());
  }
  throw std::invalid_argument("agent " + profile.name(v) + " is not acceptable to " +
                              profile.name(u));
}

}  // namespace

bool edge_critical_for(const Profile& profile, long long gamma, AgentId u, AgentId v) {
  return weakly_above(profile, u, v) > gamma;
}

bool edges_block_each_other(const Profile& profile, std::pair<AgentId, AgentId> e,
                            std::pair<AgentId, AgentId> f) {
  const AgentId es[2] = {e.first, e.second};
  const AgentId fs[2] = {f.first, f.second};
  for (AgentId a : es)
    for (AgentId b : fs)
      if (a == b) return false;  // overlapping edges never share a matching
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const AgentId a = es[i], av = es[1 - i];
      const AgentId b = fs[j], bv = fs[1 - j];
      if (!profile.acceptable(a, b)) continue;
      if (rank_of(profile, a, b) < rank_of(profile, a, av) &&
          rank_of(profile, b, a) < rank_of(profile, b, bv))
        return true;
    }
  return false;
}

Profile perfectness_reduction(const Profile& profile, long long gamma) {
  const long long k = gamma % 2 == 0 ? gamma : gamma - 1;
  if (k <= 0) return profile;

  const int n = profile.agent_count();
  const int total = n + static_cast<int>(k);

  std::vector<AgentId> shortlisted;  // agents with at most gamma acceptable partners
  for (AgentId b = 0; b < n; ++b)
    if (static_cast<long long>(profile.lists[static_cast<std::size_t>(b)].length()) <= gamma)
      shortlisted.push_back(b);

  std::vector<std::vector<std::vector<AgentId>>> groups(static_cast<std::size_t>(total));
  for (AgentId b = 0; b < n; ++b)
    for (const auto& g : profile.lists[static_cast<std::size_t>(b)].groups)
      groups[static_cast<std::size_t>(b)].push_back(g);

  std::vector<AgentId> pad_ids;
  for (int j = 0; j < k; ++j) pad_ids.push_back(n + j);
  for (AgentId b : shortlisted) groups[static_cast<std::size_t>(b)].push_back(pad_ids);
  for (AgentId a : pad_ids) {
    std::vector<AgentId> tie;
    for (AgentId other : pad_ids)
      if (other != a) tie.push_back(other);
    tie.insert(tie.end(), shortlisted.begin(), shortlisted.end());
    groups[static_cast<std::size_t>(a)].push_back(std::move(tie));
  }

  std::vector<std::string> names = profile.names;
  std::set<std::string> used(names.begin(), names.end());
  for (int j = 0; j < k; ++j) {
    std::string nm = "pad" + std::to_string(j + 1);
    while (used.count(nm)) nm += "_";
    used.insert(nm);
    names.push_back(nm);
  }
  return make_profile(std::move(groups), std::move(names));
}

namespace {

using Edge = std::pair<AgentId, AgentId>;
using PriceMap = std::map<Edge, long long>;

// Per-solve tables shared by every separation iteration. Edge prices default
// to the profile's own rank sums; the constant-cost wrapper overrides them
// with prices from the untrimmed instance.
struct Tables {
  const Profile& profile;
  long long gamma;
  int n;
  std::vector<Edge> edge_list;  // priced <= gamma, sorted
  std::vector<long long> cost;
  std::vector<int> costly_ids;  // indices into edge_list with price >= 1
  std::vector<std::vector<int>> rank;       // -1 when unacceptable
  std::vector<std::vector<char>> critical;  // critical[u][v]: {u,v} critical for u

  Tables(const Profile& p, long long g, const PriceMap* prices)
      : profile(p), gamma(g), n(p.agent_count()) {
    rank.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    critical.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (AgentId u = 0; u < n; ++u)
      for (AgentId v : p.lists[static_cast<std::size_t>(u)].flat()) {
        rank[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = rank_of(p, u, v);
        critical[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
            edge_critical_for(p, g, u, v) ? 1 : 0;
      }
    for (const auto& [u, v] : p.edges()) {
      long long c = rank[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] +
                    rank[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      if (prices) c = prices->at({u, v});
      if (c > g) continue;
      const int id = static_cast<int>(edge_list.size());
      edge_list.emplace_back(u, v);
      cost.push_back(c);
      if (c >= 1) costly_ids.push_back(id);
    }
  }

  // Visits endpoint combos (a in e, b in f) that would form a blocking pair
  // if both edges were matched; stops early when fn returns true.
  template <typename Fn>
  void blocking_combos(int e, int f, Fn&& fn) const {
    const AgentId es[2] = {edge_list[static_cast<std::size_t>(e)].first,
                           edge_list[static_cast<std::size_t>(e)].second};
    const AgentId fs[2] = {edge_list[static_cast<std::size_t>(f)].first,
                           edge_list[static_cast<std::size_t>(f)].second};
    if (es[0] == fs[0] || es[0] == fs[1] || es[1] == fs[0] || es[1] == fs[1]) return;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const AgentId a = es[i], av = es[1 - i];
        const AgentId b = fs[j], bv = fs[1 - j];
        const int rab = rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (rab < 0) continue;
        if (rab < rank[static_cast<std::size_t>(a)][static_cast<std::size_t>(av)] &&
            rank[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] <
                rank[static_cast<std::size_t>(b)][static_cast<std::size_t>(bv)]) {
          if (fn(a, av, b, bv)) return;
        }
      }
  }

  bool harmlessly_blocks(int e, int f) const {  // e blocks f where f is harmless
    bool found = false;
    blocking_combos(e, f, [&](AgentId, AgentId, AgentId b, AgentId bv) {
      if (!critical[static_cast<std::size_t>(b)][static_cast<std::size_t>(bv)]) {
        found = true;
        return true;
      }
      return false;
    });
    return found;
  }

  bool blocks_with_critical_trigger(int e, int f) const {  // e critical at the blocking endpoint
    bool found = false;
    blocking_combos(e, f, [&](AgentId a, AgentId av, AgentId, AgentId) {
      if (critical[static_cast<std::size_t>(a)][static_cast<std::size_t>(av)]) {
        found = true;
        return true;
      }
      return false;
    });
    return found;
  }
};

// Rules 1 and 2: drop unselected costly edges, then every pair of selected
// edges that harmlessly block each other. The pair condition is independent
// of the rest of the graph, so one simultaneous sweep is the fixpoint.
std::vector<char> apply_phase2_rules(const Tables& t, const std::vector<char>& costly_selected) {
  std::vector<char> alive(t.edge_list.size(), 1);
  std::vector<int> live_costly;
  for (std::size_t idx = 0; idx < t.costly_ids.size(); ++idx) {
    if (costly_selected[idx])
      live_costly.push_back(t.costly_ids[idx]);
    else
      alive[static_cast<std::size_t>(t.costly_ids[idx])] = 0;
  }
  for (std::size_t i = 0; i < live_costly.size(); ++i)
    for (std::size_t j = i + 1; j < live_costly.size(); ++j) {
      const int e = live_costly[i], f = live_costly[j];
      if (t.harmlessly_blocks(e, f) && t.harmlessly_blocks(f, e))
        alive[static_cast<std::size_t>(e)] = alive[static_cast<std::size_t>(f)] = 0;
    }
  return alive;
}

// Rule 3 in one sweep (edge-local condition), then Rule 4 in simultaneous
// rounds until nothing changes.
std::vector<char> apply_phase3_rules(const Tables& t, std::vector<char> alive,
                                     const std::vector<char>& selected_agents) {
  for (std::size_t e = 0; e < alive.size(); ++e) {
    if (!alive[e]) continue;
    const auto [u, v] = t.edge_list[e];
    if ((!selected_agents[static_cast<std::size_t>(u)] &&
         t.critical[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) ||
        (!selected_agents[static_cast<std::size_t>(v)] &&
         t.critical[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]))
      alive[e] = 0;
  }

  std::vector<int> live;
  for (;;) {
    live.clear();
    for (std::size_t e = 0; e < alive.size(); ++e)
      if (alive[e]) live.push_back(static_cast<int>(e));
    std::vector<char> removed(t.edge_list.size(), 0);
    bool any = false;
    for (int e : live)
      for (int f : live) {
        if (e == f || removed[static_cast<std::size_t>(f)]) continue;
        if (t.blocks_with_critical_trigger(e, f)) {
          removed[static_cast<std::size_t>(f)] = 1;
          any = true;
        }
      }
    if (!any) break;
    for (std::size_t e = 0; e < alive.size(); ++e)
      if (removed[e]) alive[e] = 0;
  }
  return alive;
}

// Binomials for member indexing; solver instances stay far below overflow.
unsigned long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<unsigned long long>(n - i) / (i + 1);
  return r;
}

unsigned long long members_up_to(int n, int p) {
  unsigned long long total = 0;
  for (int k = 0; k <= p; ++k) total += binom(n, k);
  return total;
}

// Index of a sorted element set within the (size, lexicographic) member order
// of the all-subsets-of-size-<=p family.
unsigned long long bounded_member_index(int n, const std::vector<int>& s) {
  unsigned long long index = 0;
  for (int k = 0; k < static_cast<int>(s.size()); ++k) index += binom(n, k);
  int prev = -1;
  const int k = static_cast<int>(s.size());
  for (int i = 0; i < k; ++i) {
    for (int x = prev + 1; x < s[static_cast<std::size_t>(i)]; ++x) index += binom(n - 1 - x, k - 1 - i);
    prev = s[static_cast<std::size_t>(i)];
  }
  return index;
}

struct OrderKey {
  std::size_t e_index = 0;
  unsigned long long v_index = 0;

  bool operator<(const OrderKey& o) const {
    return e_index != o.e_index ? e_index < o.e_index : v_index < o.v_index;
  }
};

// An exact cover-free family does not need every subset: all subsets of size
// at most p already witness every challenge (the subset S' itself does), and
// there are only sum_{k<=p} C(n, k) of them. The exhaustive solver strategy
// iterates that family; the randomized strategy samples members.
class PerfectEgalSearch {
 public:
  PerfectEgalSearch(const Profile& profile, long long gamma, const SolveOptions& options,
                    const PriceMap* prices)
      : t_(profile, gamma, prices), options_(options) {}

  std::optional<EgalSolution> run();

 private:
  Tables t_;
  SolveOptions options_;

  bool exhaustive_ = true;
  int p_edges_ = 0, p_agents_ = 0;
  // Positions (into costly_ids) of edges some costly edge can harmlessly
  // block: only those can land in the separated set, so only they form the
  // family universe. Everything else stays selected in every member.
  std::vector<int> universe_;
  std::vector<char> always_selected_;            // indexed like costly_ids
  std::vector<std::vector<int>> edge_members_;   // element lists over universe_ positions
  std::vector<std::vector<int>> agent_members_;  // randomized only

  std::mutex mu_;
  std::optional<EgalSolution> best_;
  OrderKey best_key_;
  std::atomic<std::size_t> best_e_{static_cast<std::size_t>(-1)};
  std::atomic<std::size_t> next_{0};

  std::mutex cache_mu_;
  std::map<std::vector<int>, std::optional<std::pair<Matching, long long>>> pm_cache_;

  bool offer(const OrderKey& key, const EgalSolution& sol);
  void process_edge_member(std::size_t e_index);
  // Returns true when the caller may stop scanning members for this E'.
  bool process_agent_selection(std::size_t e_index, unsigned long long v_index,
                               const std::vector<char>& e2, const std::vector<char>& selected);
  void prepare_families();
};

bool PerfectEgalSearch::offer(const OrderKey& key, const EgalSolution& sol) {
  std::lock_guard<std::mutex> lock(mu_);
  if (options_.optimal) {
    if (!best_ || sol.cost < best_->cost ||
        (sol.cost == best_->cost && sol.matching < best_->matching)) {
      best_ = sol;
      best_key_ = key;
    }
    return false;
  }
  if (!best_ || key < best_key_) {
    best_ = sol;
    best_key_ = key;
    best_e_.store(key.e_index, std::memory_order_relaxed);
  }
  return true;
}

void PerfectEgalSearch::prepare_families() {
  const int m = static_cast<int>(t_.costly_ids.size());
  const int n = t_.n;
  const long long g = t_.gamma;

  always_selected_.assign(static_cast<std::size_t>(m), 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (t_.harmlessly_blocks(t_.costly_ids[static_cast<std::size_t>(i)],
                               t_.costly_ids[static_cast<std::size_t>(j)])) {
        if (always_selected_[static_cast<std::size_t>(j)]) {
          always_selected_[static_cast<std::size_t>(j)] = 0;
          universe_.push_back(j);
        }
      }
    }
  std::sort(universe_.begin(), universe_.end());
  const int mu = static_cast<int>(universe_.size());

  switch (options_.family) {
    case SolveOptions::Family::Exhaustive: exhaustive_ = true; break;
    case SolveOptions::Family::Randomized: exhaustive_ = false; break;
    default: exhaustive_ = mu <= 16 && n <= 16; break;
  }

  p_edges_ = static_cast<int>(std::min<long long>(g, mu));
  p_agents_ = static_cast<int>(std::min<long long>(2 * g, n));

  if (exhaustive_) {
    constexpr unsigned long long kMemberCap = 2000000;
    if (members_up_to(mu, p_edges_) > kMemberCap)
      throw CapacityError(
          "exhaustive separation too large for " + std::to_string(mu) +
          " separable costly edges at this budget; rerun with a randomized family");
    // All subsets of size <= p over the universe, by size then lex.
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from, int want) -> void {
      if (want == 0) {
        edge_members_.push_back(cur);
        return;
      }
      for (int x = from; x <= mu - want; ++x) {
        cur.push_back(x);
        self(self, x + 1, want - 1);
        cur.pop_back();
      }
    };
    for (int size = 0; size <= p_edges_; ++size) rec(rec, 0, size);
    return;
  }

  const auto clamp_q = [](long long q, int universe, int p) {
    return static_cast<int>(std::min<long long>(q, universe - p));
  };
  const int q_edges = clamp_q(g * g * g, mu, p_edges_);
  const int q_agents = clamp_q(g * g + 2 * g, n, p_agents_);
  const CoverFreeFamily fe = build_family(
      mu, p_edges_, q_edges, FamilyStrategy::randomized(options_.trials, options_.seed));
  for (std::size_t i = 0; i < fe.size(); ++i) edge_members_.push_back(fe.member_elements(i));
  const CoverFreeFamily fa = build_family(
      n, p_agents_, q_agents, FamilyStrategy::randomized(options_.trials, options_.seed + 1));
  for (std::size_t i = 0; i < fa.size(); ++i) agent_members_.push_back(fa.member_elements(i));
}

bool PerfectEgalSearch::process_agent_selection(std::size_t e_index, unsigned long long v_index,
                                                const std::vector<char>& e2,
                                                const std::vector<char>& selected) {
  const std::vector<char> e3 = apply_phase3_rules(t_, e2, selected);

  std::vector<int> live_ids;
  std::vector<char> covered(static_cast<std::size_t>(t_.n), 0);
  for (std::size_t e = 0; e < e3.size(); ++e)
    if (e3[e]) {
      live_ids.push_back(static_cast<int>(e));
      covered[static_cast<std::size_t>(t_.edge_list[e].first)] = 1;
      covered[static_cast<std::size_t>(t_.edge_list[e].second)] = 1;
    }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return false;

  std::optional<std::pair<Matching, long long>> pm;
  bool cached = false;
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = pm_cache_.find(live_ids);
    if (it != pm_cache_.end()) {
      pm = it->second;
      cached = true;
    }
  }
  if (!cached) {
    WeightedGraph wg;
    wg.vertex_count = t_.n;
    for (int e : live_ids)
      wg.edges.push_back({t_.edge_list[static_cast<std::size_t>(e)].first,
                          t_.edge_list[static_cast<std::size_t>(e)].second,
                          t_.cost[static_cast<std::size_t>(e)]});
    pm = min_cost_perfect_matching(wg);
    std::lock_guard<std::mutex> lock(cache_mu_);
    pm_cache_.emplace(live_ids, pm);
  }
  if (!pm || pm->second > t_.gamma) return false;

  // Any perfect matching inside the pruned graph is stable; check it anyway
  // before handing the result out.
  if (!is_stable(t_.profile, pm->first))
    throw std::logic_error("separation produced an unstable perfect matching");
  return offer({e_index, v_index}, EgalSolution{pm->first, pm->second});
}

void PerfectEgalSearch::process_edge_member(std::size_t e_index) {
  std::vector<char> costly_selected = always_selected_;
  for (int pos : edge_members_[e_index])
    costly_selected[static_cast<std::size_t>(universe_[static_cast<std::size_t>(pos)])] = 1;
  const std::vector<char> e2 = apply_phase2_rules(t_, costly_selected);

  std::vector<char> covered(static_cast<std::size_t>(t_.n), 0);
  for (std::size_t e = 0; e < e2.size(); ++e)
    if (e2[e]) {
      covered[static_cast<std::size_t>(t_.edge_list[e].first)] = 1;
      covered[static_cast<std::size_t>(t_.edge_list[e].second)] = 1;
    }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return;

  // Rule 3 reads agent selection only at vertices carrying a critical live
  // edge; every other vertex's membership is irrelevant.
  std::vector<int> relevant;
  {
    std::vector<char> seen(static_cast<std::size_t>(t_.n), 0);
    for (std::size_t e = 0; e < e2.size(); ++e) {
      if (!e2[e]) continue;
      const auto [u, v] = t_.edge_list[e];
      if (t_.critical[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) seen[static_cast<std::size_t>(u)] = 1;
      if (t_.critical[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int a = 0; a < t_.n; ++a)
      if (seen[static_cast<std::size_t>(a)]) relevant.push_back(a);
  }

  std::vector<char> selected(static_cast<std::size_t>(t_.n), 0);
  if (exhaustive_) {
    // Effective members are exactly the subsets of the relevant set; the
    // first family member realizing subset s is s itself, whose position in
    // the (size, lex) order is computable directly.
    const int limit = std::min<int>(p_agents_, static_cast<int>(relevant.size()));
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int want) -> bool {
      if (want == 0) {
        std::fill(selected.begin(), selected.end(), 0);
        std::vector<int> elems;
        for (int idx : pick) {
          selected[static_cast<std::size_t>(relevant[static_cast<std::size_t>(idx)])] = 1;
          elems.push_back(relevant[static_cast<std::size_t>(idx)]);
        }
        return process_agent_selection(e_index, bounded_member_index(t_.n, elems), e2, selected);
      }
      for (int x = from; x <= static_cast<int>(relevant.size()) - want; ++x) {
        pick.push_back(x);
        const bool stop = self(self, x + 1, want - 1);
        pick.pop_back();
        if (stop) return true;
      }
      return false;
    };
    for (int size = 0; size <= limit; ++size)
      if (rec(rec, 0, size)) return;
    return;
  }

  std::set<std::vector<char>> seen_keys;
  for (std::size_t v_index = 0; v_index < agent_members_.size(); ++v_index) {
    std::fill(selected.begin(), selected.end(), 0);
    for (int a : agent_members_[v_index]) selected[static_cast<std::size_t>(a)] = 1;
    std::vector<char> key(relevant.size());
    for (std::size_t i = 0; i < relevant.size(); ++i)
      key[i] = selected[static_cast<std::size_t>(relevant[i])];
    if (!seen_keys.insert(key).second) continue;
    if (process_agent_selection(e_index, v_index, e2, selected)) return;
  }
}

std::optional<EgalSolution> PerfectEgalSearch::run() {
  const int n = t_.n;
  if (n == 0) return EgalSolution{Matching(0), 0};
  if (n % 2 != 0) return std::nullopt;

  // A perfect matching within budget uses edges priced <= gamma only.
  std::vector<char> touched(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : t_.edge_list)
    touched[static_cast<std::size_t>(u)] = touched[static_cast<std::size_t>(v)] = 1;
  if (std::find(touched.begin(), touched.end(), 0) != touched.end()) return std::nullopt;

  prepare_families();

  const std::size_t edge_members = edge_members_.size();
  const int jobs = std::max(1, options_.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < edge_members; ++i) {
      process_edge_member(i);
      if (!options_.optimal && best_) break;
    }
  } else {
    auto worker = [this, edge_members]() {
      for (;;) {
        const std::size_t i = next_.fetch_add(1, std::memory_order_relaxed);
        if (i >= edge_members) return;
        if (!options_.optimal && best_e_.load(std::memory_order_relaxed) < i) continue;
        process_edge_member(i);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  return best_;
}

std::optional<EgalSolution> solve_perfect_egal_priced(const Profile& profile, long long gamma,
                                                      const SolveOptions& options,
                                                      const PriceMap* prices) {
  if (gamma < 0) return std::nullopt;
  PerfectEgalSearch search(profile, gamma, options, prices);
  return search.run();
}

}  // namespace

std::optional<EgalSolution> solve_perfect_egal(const Profile& profile, long long gamma,
                                               const SolveOptions& options) {
  return solve_perfect_egal_priced(profile, gamma, options, nullptr);
}

std::optional<EgalSolution> solve_egal_ties(const Profile& profile, long long gamma,
                                            const SolveOptions& options) {
  if (profile.agent_count() % 2 != 0)
    throw std::invalid_argument("egalitarian solver requires an even number of agents");
  if (gamma < 0) return std::nullopt;

  const Profile reduced = perfectness_reduction(profile, gamma);
  auto sol = solve_perfect_egal(reduced, gamma, options);
  if (!sol) return std::nullopt;

  Matching original(profile.agent_count());
  for (const auto& [u, v] : sol->matching.pairs())
    if (u < profile.agent_count() && v < profile.agent_count()) original.add(u, v);

  const long long cost = egalitarian_cost(profile, original, CostSemantics::list_length());
  if (!is_stable(profile, original) || cost > gamma)
    throw std::logic_error("padded solution did not project to a valid original solution");
  return EgalSolution{std::move(original), cost};
}

std::optional<EgalSolution> solve_egal_constant(const Profile& profile, long long gamma, int c,
                                                const SolveOptions& options) {
  if (c < 1) throw std::invalid_argument("constant unmatched cost must be >= 1");
  if (gamma < 0) return std::nullopt;

  const int n = profile.agent_count();
  const long long max_unmatched = std::min<long long>(gamma / c, n);

  SolveOptions inner = options;
  inner.optimal = true;  // per-guess optima make the global minimum exact

  std::optional<EgalSolution> best;

  auto consider = [&](const std::vector<AgentId>& away) {
    if ((n - static_cast<int>(away.size())) % 2 != 0) return;
    const long long budget = gamma - static_cast<long long>(c) * static_cast<long long>(away.size());
    if (budget < 0) return;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (AgentId a : away) removed[static_cast<std::size_t>(a)] = 1;
    // Two mutually acceptable agents cannot both stay unmatched.
    for (std::size_t i = 0; i < away.size(); ++i)
      for (std::size_t j = i + 1; j < away.size(); ++j)
        if (profile.acceptable(away[i], away[j])) return;

    // Whoever accepts a removed agent must end up no worse than it, so every
    // strictly worse entry goes; the pair of trims need not agree, and an
    // edge survives only when both sides keep it.
    std::vector<int> cutoff(static_cast<std::size_t>(n), -1);  // -1: keep everything
    for (AgentId a = 0; a < n; ++a) {
      if (removed[static_cast<std::size_t>(a)]) continue;
      int best_removed = -1;
      for (AgentId x : profile.lists[static_cast<std::size_t>(a)].flat())
        if (removed[static_cast<std::size_t>(x)]) {
          const int r = rank_of(profile, a, x);
          if (best_removed < 0 || r < best_removed) best_removed = r;
        }
      cutoff[static_cast<std::size_t>(a)] = best_removed;
    }
    auto keeps = [&](AgentId a, AgentId x) {
      if (removed[static_cast<std::size_t>(x)]) return false;
      const int cut = cutoff[static_cast<std::size_t>(a)];
      return cut < 0 || rank_of(profile, a, x) <= cut;
    };

    std::vector<AgentId> to_residual(static_cast<std::size_t>(n), kNoAgent);
    std::vector<AgentId> back;
    for (AgentId a = 0; a < n; ++a)
      if (!removed[static_cast<std::size_t>(a)]) {
        to_residual[static_cast<std::size_t>(a)] = static_cast<AgentId>(back.size());
        back.push_back(a);
      }

    std::vector<std::vector<std::vector<AgentId>>> groups(back.size());
    PriceMap prices;
    for (std::size_t r = 0; r < back.size(); ++r) {
      const AgentId a = back[r];
      for (const auto& g : profile.lists[static_cast<std::size_t>(a)].groups) {
        std::vector<AgentId> kept;
        for (AgentId x : g)
          if (keeps(a, x) && keeps(x, a)) kept.push_back(to_residual[static_cast<std::size_t>(x)]);
        if (!kept.empty()) groups[r].push_back(std::move(kept));
      }
      if (groups[r].empty()) return;  // this agent could never be matched
    }
    std::vector<std::string> names;
    names.reserve(back.size());
    for (AgentId a : back) names.push_back(profile.name(a));
    Profile residual = make_profile(std::move(groups), std::move(names));

    // Trimming shifts structural ranks, so price residual edges with the
    // original rank sums.
    for (const auto& [ru, rv] : residual.edges())
      prices[{ru, rv}] = edge_cost(profile, back[static_cast<std::size_t>(ru)], back[static_cast<std::size_t>(rv)]);

    auto sol = solve_perfect_egal_priced(residual, budget, inner, &prices);
    if (!sol) return;

    Matching full(n);
    for (const auto& [u, v] : sol->matching.pairs())
      full.add(back[static_cast<std::size_t>(u)], back[static_cast<std::size_t>(v)]);
    const long long total = egalitarian_cost(profile, full, CostSemantics::constant_cost(c));
    if (!is_stable(profile, full) || total > gamma)
      throw std::logic_error("constant-cost guess produced an invalid solution");
    if (!best || total < best->cost || (total == best->cost && full < best->matching))
      best = EgalSolution{std::move(full), total};
  };

  std::vector<AgentId> stack;
  auto rec = [&](auto&& self, AgentId from, int want) -> void {
    if (want == 0) {
      consider(stack);
      return;
    }
    for (AgentId a = from; a <= n - want; ++a) {
      stack.push_back(a);
      self(self, a + 1, want - 1);
      stack.pop_back();
    }
  };
  for (int size = 0; size <= max_unmatched; ++size) rec(rec, 0, size);
  return best;
}

std::vector<std::pair<AgentId, AgentId>> harmlessly_blocked_edges(const Profile& profile,
                                                                  long long gamma,
                                                                  const Matching& m) {
  Tables t(profile, gamma, nullptr);
  std::vector<int> matched_ids;
  for (std::size_t e = 0; e < t.edge_list.size(); ++e) {
    const auto [u, v] = t.edge_list[e];
    if (m.contains(u, v)) matched_ids.push_back(static_cast<int>(e));
  }
  std::set<Edge> out;
  for (std::size_t f = 0; f < t.edge_list.size(); ++f) {
    const auto [u, v] = t.edge_list[f];
    if (m.contains(u, v)) continue;
    for (int e : matched_ids)
      if (t.harmlessly_blocks(e, static_cast<int>(f))) {
        out.insert(t.edge_list[f]);
        break;
      }
  }
  return {out.begin(), out.end()};
}

std::vector<AgentId> culprits(const Profile& profile, long long gamma, const Matching& m) {
  Tables t(profile, gamma, nullptr);
  std::vector<int> matched_ids;
  for (std::size_t e = 0; e < t.edge_list.size(); ++e) {
    const auto [u, v] = t.edge_list[e];
    if (m.contains(u, v)) matched_ids.push_back(static_cast<int>(e));
  }
  std::set<AgentId> out;
  for (std::size_t f = 0; f < t.edge_list.size(); ++f) {
    const auto [u, v] = t.edge_list[f];
    if (m.contains(u, v)) continue;
    for (int e : matched_ids)
      t.blocking_combos(e, static_cast<int>(f), [&](AgentId, AgentId, AgentId b, AgentId) {
        out.insert(b);
        return false;
      });
  }
  return {out.begin(), out.end()};
}

}  // namespace sr
