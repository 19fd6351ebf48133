#include "sr/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sr {

AgentId ProfileBuilder::add_agent(const std::string& name) {
  if (by_name_.count(name)) throw std::invalid_argument("duplicate agent name: " + name);
  const AgentId id = static_cast<AgentId>(names_.size());
  names_.push_back(name);
  by_name_[name] = id;
  groups_.emplace_back();
  set_.push_back(0);
  return id;
}

AgentId ProfileBuilder::id(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw std::invalid_argument("unknown agent name: " + name);
  return it->second;
}

bool ProfileBuilder::has_agent(const std::string& name) const { return by_name_.count(name) != 0; }

void ProfileBuilder::set_prefs(AgentId agent, std::vector<std::vector<AgentId>> groups) {
  if (set_[static_cast<std::size_t>(agent)])
    throw std::invalid_argument("preferences already set for " + name(agent));
  groups_[static_cast<std::size_t>(agent)] = std::move(groups);
  set_[static_cast<std::size_t>(agent)] = 1;
}

bool ProfileBuilder::prefs_set(AgentId agent) const { return set_[static_cast<std::size_t>(agent)] != 0; }

Profile ProfileBuilder::build() const {
  for (std::size_t a = 0; a < names_.size(); ++a)
    if (!set_[a]) throw std::invalid_argument("preferences never set for " + names_[a]);
  return make_profile(groups_, names_);
}

std::vector<std::pair<AgentId, AgentId>> SelectorGadget::ring_pairs() const {
  std::vector<std::pair<AgentId, AgentId>> out;
  const int t = static_cast<int>(a.size());
  for (int i = 0; i < t; ++i) {
    const AgentId prev = a[static_cast<std::size_t>((i + t - 1) % t)];
    const AgentId cur = a[static_cast<std::size_t>(i)];
    out.emplace_back(std::min(prev, cur), std::max(prev, cur));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SelectorGadget selector_gadget(ProfileBuilder& pb, int n_prime,
                               const std::vector<AgentId>& u_agents, const std::string& a_role,
                               const std::string& c_role, const std::string& d_role,
                               const std::string& tag) {
  if (n_prime < 1) throw std::invalid_argument("selector gadget needs n' >= 1");
  const int t = 2 * n_prime + 1;
  if (static_cast<int>(u_agents.size()) != t)
    throw std::invalid_argument("selector gadget needs 2n'+1 u-agents");

  SelectorGadget g;
  auto mk = [&pb, &tag](const std::string& role, int i) {
    return pb.add_agent(role + "[" + tag + ",i=" + std::to_string(i) + "]");
  };
  for (int i = 0; i < t; ++i) g.a.push_back(mk(a_role, i));
  for (int i = 0; i < t; ++i) g.c.push_back(mk(c_role, i));
  for (int i = 0; i < t; ++i) g.d.push_back(mk(d_role, i));

  for (int i = 0; i < t; ++i) {
    const int next = (i + 1) % t, prev = (i + t - 1) % t;
    pb.set_prefs(g.a[static_cast<std::size_t>(i)],
                 {{g.a[static_cast<std::size_t>(next)]},
                  {g.a[static_cast<std::size_t>(prev)]},
                  {u_agents[static_cast<std::size_t>(i)]},
                  {g.c[static_cast<std::size_t>(i)]},
                  {g.d[static_cast<std::size_t>(i)]}});
    pb.set_prefs(g.c[static_cast<std::size_t>(i)],
                 {{g.d[static_cast<std::size_t>(i)]}, {g.a[static_cast<std::size_t>(i)]}});
    pb.set_prefs(g.d[static_cast<std::size_t>(i)],
                 {{g.a[static_cast<std::size_t>(i)]}, {g.c[static_cast<std::size_t>(i)]}});
  }
  return g;
}

VertexGadget vertex_gadget(ProfileBuilder& pb, int delta, AgentId a, AgentId b,
                           const std::vector<AgentId>& y_slots, const std::string& tag) {
  if (delta < 1) throw std::invalid_argument("vertex gadget needs delta >= 1");
  if (static_cast<int>(y_slots.size()) != delta)
    throw std::invalid_argument("vertex gadget needs exactly delta y-slots");

  VertexGadget g;
  const int count = 2 * delta + 2;
  for (int z = 0; z < count; ++z)
    g.x.push_back(pb.add_agent("u[" + tag + ",z=" + std::to_string(z) + "]"));

  pb.set_prefs(g.x[0], {{g.x[1]}, {a}, {g.x[static_cast<std::size_t>(count - 1)]}});
  for (int i = 1; i <= delta; ++i) {
    pb.set_prefs(g.x[static_cast<std::size_t>(2 * i - 1)],
                 {{g.x[static_cast<std::size_t>(2 * i)]}, {g.x[static_cast<std::size_t>(2 * i - 2)]}});
    std::vector<std::vector<AgentId>> groups{{g.x[static_cast<std::size_t>(2 * i + 1)]}};
    if (y_slots[static_cast<std::size_t>(i - 1)] != kNoAgent)
      groups.push_back({y_slots[static_cast<std::size_t>(i - 1)]});
    groups.push_back({g.x[static_cast<std::size_t>(2 * i - 1)]});
    pb.set_prefs(g.x[static_cast<std::size_t>(2 * i)], std::move(groups));
  }
  pb.set_prefs(g.x[static_cast<std::size_t>(count - 1)],
               {{g.x[0]}, {b}, {g.x[static_cast<std::size_t>(count - 2)]}});
  return g;
}

int ColoredGraph::total_vertices() const {
  int n = 0;
  for (const auto& c : classes) n += static_cast<int>(c.size());
  return n;
}

namespace {

struct VertexRef {
  int cls, idx;
  bool operator<(const VertexRef& o) const {
    return cls != o.cls ? cls < o.cls : idx < o.idx;
  }
  bool operator==(const VertexRef& o) const { return cls == o.cls && idx == o.idx; }
};

}  // namespace

McisMbpInstance mcis_to_mbp(const ColoredGraph& g) {
  const int k = static_cast<int>(g.classes.size());
  if (k == 0) throw std::invalid_argument("colored graph needs at least one class");
  for (const auto& cls : g.classes)
    if (cls.empty()) throw std::invalid_argument("empty color class has no independent set");

  McisMbpInstance inst;
  inst.k = k;
  inst.beta = 2 * k;

  // Equalize classes to a common odd size of at least three. Padding
  // vertices conflict with every vertex of every other class, which keeps
  // them out of any multicolored independent set.
  int target = 3;
  for (const auto& cls : g.classes) target = std::max(target, static_cast<int>(cls.size()));
  if (target % 2 == 0) ++target;
  inst.n_prime = (target - 1) / 2;

  std::map<std::string, VertexRef> where;
  inst.class_vertices.resize(static_cast<std::size_t>(k));
  inst.is_padding.resize(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    for (const auto& name : g.classes[static_cast<std::size_t>(j)]) {
      if (where.count(name)) throw std::invalid_argument("vertex in two classes: " + name);
      where[name] = {j, static_cast<int>(inst.class_vertices[static_cast<std::size_t>(j)].size())};
      inst.class_vertices[static_cast<std::size_t>(j)].push_back(name);
      inst.is_padding[static_cast<std::size_t>(j)].push_back(0);
    }
    int p = 0;
    while (static_cast<int>(inst.class_vertices[static_cast<std::size_t>(j)].size()) < target) {
      const std::string name = "pad[j=" + std::to_string(j + 1) + ",p=" + std::to_string(++p) + "]";
      where[name] = {j, static_cast<int>(inst.class_vertices[static_cast<std::size_t>(j)].size())};
      inst.class_vertices[static_cast<std::size_t>(j)].push_back(name);
      inst.is_padding[static_cast<std::size_t>(j)].push_back(1);
    }
  }

  std::set<std::pair<VertexRef, VertexRef>> edges;
  auto add_edge = [&edges](VertexRef x, VertexRef y) {
    if (x == y) return;
    edges.insert(x < y ? std::make_pair(x, y) : std::make_pair(y, x));
  };
  for (const auto& [xn, yn] : g.edges) {
    if (!where.count(xn)) throw std::invalid_argument("edge endpoint not in any class: " + xn);
    if (!where.count(yn)) throw std::invalid_argument("edge endpoint not in any class: " + yn);
    add_edge(where[xn], where[yn]);
  }
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < target; ++i) {
      if (!inst.is_padding[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) continue;
      for (int j2 = 0; j2 < k; ++j2) {
        if (j2 == j) continue;
        for (int i2 = 0; i2 < target; ++i2) add_edge({j, i}, {j2, i2});
      }
    }

  std::vector<std::vector<int>> delta(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(target), 0));
  for (const auto& [x, y] : edges) {
    ++delta[static_cast<std::size_t>(x.cls)][static_cast<std::size_t>(x.idx)];
    ++delta[static_cast<std::size_t>(y.cls)][static_cast<std::size_t>(y.idx)];
  }
  std::vector<std::vector<int>> slots(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(target), 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < target; ++i)
      slots[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          std::max(1, delta[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);

  // Create the chain agents first so edge wiring can reference both sides.
  ProfileBuilder pb;
  inst.u_ids.assign(static_cast<std::size_t>(k), {});
  for (int j = 0; j < k; ++j) {
    inst.u_ids[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(target));
    for (int i = 0; i < target; ++i) {
      const int count = 2 * slots[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] + 2;
      auto& ids = inst.u_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      for (int z = 0; z < count; ++z)
        ids.push_back(pb.add_agent("u[j=" + std::to_string(j + 1) + ",i=" + std::to_string(i) +
                                   ",z=" + std::to_string(z) + "]"));
    }
  }

  // Each endpoint of each edge consumes its lowest unused y-slot; edges are
  // wired in lexicographic order so the assignment is deterministic.
  std::vector<std::vector<int>> used(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(target), 0));
  std::vector<std::vector<std::vector<AgentId>>> y_of(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    y_of[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(target));
    for (int i = 0; i < target; ++i)
      y_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
          .assign(static_cast<std::size_t>(slots[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]), kNoAgent);
  }
  for (const auto& [x, y] : edges) {
    const int zx = used[static_cast<std::size_t>(x.cls)][static_cast<std::size_t>(x.idx)]++;
    const int zy = used[static_cast<std::size_t>(y.cls)][static_cast<std::size_t>(y.idx)]++;
    y_of[static_cast<std::size_t>(x.cls)][static_cast<std::size_t>(x.idx)][static_cast<std::size_t>(zx)] =
        inst.u_ids[static_cast<std::size_t>(y.cls)][static_cast<std::size_t>(y.idx)][static_cast<std::size_t>(2 * (zy + 1))];
    y_of[static_cast<std::size_t>(y.cls)][static_cast<std::size_t>(y.idx)][static_cast<std::size_t>(zy)] =
        inst.u_ids[static_cast<std::size_t>(x.cls)][static_cast<std::size_t>(x.idx)][static_cast<std::size_t>(2 * (zx + 1))];
  }

  inst.a_ids.assign(static_cast<std::size_t>(k), {});
  inst.b_ids.assign(static_cast<std::size_t>(k), {});
  inst.c_ids.assign(static_cast<std::size_t>(k), {});
  inst.d_ids.assign(static_cast<std::size_t>(k), {});
  inst.f_ids.assign(static_cast<std::size_t>(k), {});
  inst.w_ids.assign(static_cast<std::size_t>(k), {});
  for (int j = 0; j < k; ++j) {
    const std::string tag = "j=" + std::to_string(j + 1);
    std::vector<AgentId> first, last;
    for (int i = 0; i < target; ++i) {
      const auto& ids = inst.u_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      first.push_back(ids.front());
      last.push_back(ids.back());
    }
    SelectorGadget sel_a = selector_gadget(pb, inst.n_prime, first, "a", "c", "d", tag);
    SelectorGadget sel_b = selector_gadget(pb, inst.n_prime, last, "b", "f", "w", tag);
    inst.a_ids[static_cast<std::size_t>(j)] = sel_a.a;
    inst.c_ids[static_cast<std::size_t>(j)] = sel_a.c;
    inst.d_ids[static_cast<std::size_t>(j)] = sel_a.d;
    inst.b_ids[static_cast<std::size_t>(j)] = sel_b.a;
    inst.f_ids[static_cast<std::size_t>(j)] = sel_b.c;
    inst.w_ids[static_cast<std::size_t>(j)] = sel_b.d;
  }

  // Chain preference lists, now that selector endpoints exist.
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < target; ++i) {
      const auto& ids = inst.u_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      const int d = slots[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      const int count = 2 * d + 2;
      const AgentId a_end = inst.a_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      const AgentId b_end = inst.b_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      pb.set_prefs(ids[0], {{ids[1]}, {a_end}, {ids[static_cast<std::size_t>(count - 1)]}});
      for (int z = 1; z <= d; ++z) {
        pb.set_prefs(ids[static_cast<std::size_t>(2 * z - 1)],
                     {{ids[static_cast<std::size_t>(2 * z)]}, {ids[static_cast<std::size_t>(2 * z - 2)]}});
        std::vector<std::vector<AgentId>> groups{{ids[static_cast<std::size_t>(2 * z + 1)]}};
        const AgentId y = y_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(z - 1)];
        if (y != kNoAgent) groups.push_back({y});
        groups.push_back({ids[static_cast<std::size_t>(2 * z - 1)]});
        pb.set_prefs(ids[static_cast<std::size_t>(2 * z)], std::move(groups));
      }
      pb.set_prefs(ids[static_cast<std::size_t>(count - 1)],
                   {{ids[0]}, {b_end}, {ids[static_cast<std::size_t>(count - 2)]}});
    }

  inst.profile = pb.build();
  if (inst.profile.has_ties()) throw std::logic_error("reduction output must be tie-free");
  for (const auto& list : inst.profile.lists)
    if (list.length() > 5) throw std::logic_error("reduction output list longer than five");
  return inst;
}

std::vector<std::string> McisMbpInstance::decode(const Matching& m) const {
  std::vector<std::string> out;
  for (int j = 0; j < k; ++j)
    for (std::size_t i = 0; i < a_ids[static_cast<std::size_t>(j)].size(); ++i)
      if (m.contains(a_ids[static_cast<std::size_t>(j)][i], u_ids[static_cast<std::size_t>(j)][i].front()))
        out.push_back(class_vertices[static_cast<std::size_t>(j)][i]);
  return out;
}

Matching McisMbpInstance::witness_matching(const std::vector<int>& chosen) const {
  if (static_cast<int>(chosen.size()) != k)
    throw std::invalid_argument("witness needs one vertex index per class");
  const int t = 2 * n_prime + 1;
  Matching m(profile.agent_count());
  for (int j = 0; j < k; ++j) {
    const int sel = chosen[static_cast<std::size_t>(j)];
    if (sel < 0 || sel >= t) throw std::invalid_argument("chosen index out of range");
    for (int i = 0; i < t; ++i) {
      m.add(c_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
            d_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
      m.add(f_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
            w_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    }
    const auto& chain = u_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(sel)];
    m.add(a_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(sel)], chain.front());
    m.add(b_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(sel)], chain.back());
    for (int z = 1; z + 1 < static_cast<int>(chain.size()) - 1; z += 2)
      m.add(chain[static_cast<std::size_t>(z)], chain[static_cast<std::size_t>(z + 1)]);
    for (int off = 1; off <= 2 * n_prime; off += 2) {
      const int lo = (sel + off) % t, hi = (sel + off + 1) % t;
      m.add(a_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(lo)],
            a_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(hi)]);
      m.add(b_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(lo)],
            b_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(hi)]);
    }
    for (int i = 0; i < t; ++i) {
      if (i == sel) continue;
      const auto& other = u_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      for (std::size_t z = 0; z + 1 < other.size(); z += 2)
        m.add(other[z], other[z + 1]);
    }
  }
  return m;
}

std::vector<std::pair<AgentId, AgentId>> McisMbpInstance::expected_blocking_pairs(
    const std::vector<int>& chosen) const {
  const int t = 2 * n_prime + 1;
  std::vector<std::pair<AgentId, AgentId>> out;
  for (int j = 0; j < k; ++j) {
    const int sel = chosen[static_cast<std::size_t>(j)];
    const int prev = (sel + t - 1) % t;
    auto push = [&out](AgentId x, AgentId y) { out.emplace_back(std::min(x, y), std::max(x, y)); };
    push(a_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(prev)],
         a_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(sel)]);
    push(b_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(prev)],
         b_ids[static_cast<std::size_t>(j)][static_cast<std::size_t>(sel)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::pair<AgentId, AgentId>>> McisMbpInstance::ring_pair_candidates()
    const {
  std::vector<std::vector<std::pair<AgentId, AgentId>>> out;
  const int t = 2 * n_prime + 1;
  auto rings = [&out, t](const std::vector<AgentId>& ring) {
    std::vector<std::pair<AgentId, AgentId>> pairs;
    for (int i = 0; i < t; ++i) {
      const AgentId x = ring[static_cast<std::size_t>(i)], y = ring[static_cast<std::size_t>((i + 1) % t)];
      pairs.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(pairs.begin(), pairs.end());
    out.push_back(std::move(pairs));
  };
  for (int j = 0; j < k; ++j) {
    rings(a_ids[static_cast<std::size_t>(j)]);
    rings(b_ids[static_cast<std::size_t>(j)]);
  }
  return out;
}

Sat3EgalInstance sat3_to_egal_zero(const CnfFormula& formula) {
  const int n = formula.variables;
  std::vector<int> pos_count(static_cast<std::size_t>(n) + 1, 0), neg_count(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& clause : formula.clauses)
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > n) throw std::invalid_argument("literal out of range");
      (lit > 0 ? pos_count : neg_count)[static_cast<std::size_t>(std::abs(lit))]++;
    }
  for (int i = 1; i <= n; ++i)
    if (pos_count[static_cast<std::size_t>(i)] != 2 || neg_count[static_cast<std::size_t>(i)] != 2)
      throw std::invalid_argument("every literal must appear exactly twice (variable " +
                                  std::to_string(i) + ")");

  ProfileBuilder pb;
  Sat3EgalInstance inst;
  inst.b_ids.resize(static_cast<std::size_t>(n));
  inst.c_ids.resize(static_cast<std::size_t>(n));
  inst.d_ids.resize(static_cast<std::size_t>(n));

  const char* sign_tag[2] = {"T", "F"};
  for (int i = 0; i < n; ++i) {
    const std::string vi = "[i=" + std::to_string(i + 1) + "]";
    inst.var_hub.push_back(pb.add_agent("as" + vi));
    inst.var_side.push_back({pb.add_agent("aT" + vi), pb.add_agent("aF" + vi)});
    for (int s = 0; s < 2; ++s)
      for (int r = 0; r < 2; ++r) {
        const std::string suffix = std::string(sign_tag[s]) + "[i=" + std::to_string(i + 1) +
                                   ",r=" + std::to_string(r + 1) + "]";
        inst.b_ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] =
            pb.add_agent("b" + suffix);
        inst.c_ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] =
            pb.add_agent("c" + suffix);
        inst.d_ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] =
            pb.add_agent("d" + suffix);
      }
  }

  const int m = static_cast<int>(formula.clauses.size());
  for (int j = 0; j < m; ++j) {
    const std::string cj = "[j=" + std::to_string(j + 1) + "]";
    inst.clause_u.push_back(pb.add_agent("u" + cj));
    inst.clause_w.push_back(pb.add_agent("w" + cj));
    std::array<AgentId, 3> xs{};
    for (int r = 0; r < 3; ++r)
      xs[static_cast<std::size_t>(r)] =
          pb.add_agent("x[j=" + std::to_string(j + 1) + ",r=" + std::to_string(r + 1) + "]");
    inst.clause_x.push_back(xs);
    inst.clause_lits.push_back(formula.clauses[static_cast<std::size_t>(j)]);
  }

  // Wire each literal occurrence to its clause slot: the occurrence's d agent
  // doubles as the slot's y agent, the c agent as the slot's z agent.
  std::vector<std::array<int, 2>> next_occ(static_cast<std::size_t>(n), {0, 0});
  std::vector<std::array<AgentId, 3>> slot_d(static_cast<std::size_t>(m));
  std::map<AgentId, AgentId> x_of_d;
  for (int j = 0; j < m; ++j)
    for (int r = 0; r < 3; ++r) {
      const int lit = formula.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
      const int i = std::abs(lit) - 1;
      const int s = lit > 0 ? 0 : 1;
      const int occ = next_occ[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]++;
      const AgentId d = inst.d_ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)][static_cast<std::size_t>(occ)];
      slot_d[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] = d;
      x_of_d[d] = inst.clause_x[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
    }

  for (int i = 0; i < n; ++i) {
    pb.set_prefs(inst.var_hub[static_cast<std::size_t>(i)],
                 {{inst.var_side[static_cast<std::size_t>(i)][0], inst.var_side[static_cast<std::size_t>(i)][1]}});
    for (int s = 0; s < 2; ++s) {
      const auto& b = inst.b_ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
      pb.set_prefs(inst.var_side[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)],
                   {{inst.var_hub[static_cast<std::size_t>(i)]}, {b[0], b[1]}});
      for (int r = 0; r < 2; ++r) {
        const AgentId bc = inst.c_ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)][static_cast<std::size_t>(r)];
        const AgentId bd = inst.d_ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)][static_cast<std::size_t>(r)];
        pb.set_prefs(b[static_cast<std::size_t>(r)],
                     {{bc}, {inst.var_side[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]}});
        pb.set_prefs(bc, {{b[static_cast<std::size_t>(r)], bd}});
        pb.set_prefs(bd, {{bc}, {x_of_d.at(bd)}});
      }
    }
  }
  for (int j = 0; j < m; ++j) {
    const auto& xs = inst.clause_x[static_cast<std::size_t>(j)];
    pb.set_prefs(inst.clause_u[static_cast<std::size_t>(j)], {{xs[0], xs[1], xs[2]}});
    pb.set_prefs(inst.clause_w[static_cast<std::size_t>(j)], {{xs[0], xs[1], xs[2]}});
    for (int r = 0; r < 3; ++r)
      pb.set_prefs(xs[static_cast<std::size_t>(r)],
                   {{inst.clause_u[static_cast<std::size_t>(j)], inst.clause_w[static_cast<std::size_t>(j)]},
                    {slot_d[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)]}});
  }

  inst.profile = pb.build();
  inst.gamma = 0;
  return inst;
}

std::vector<bool> Sat3EgalInstance::decode(const Matching& m) const {
  std::vector<bool> out;
  for (std::size_t i = 0; i < var_hub.size(); ++i)
    out.push_back(m.contains(var_hub[i], var_side[i][0]));
  return out;
}

Matching Sat3EgalInstance::witness_matching(const std::vector<bool>& assignment) const {
  if (assignment.size() != var_hub.size())
    throw std::invalid_argument("assignment size does not match variable count");
  Matching m(profile.agent_count());
  for (std::size_t i = 0; i < var_hub.size(); ++i) {
    const std::size_t sat = assignment[i] ? 0 : 1;  // matched side
    m.add(var_hub[i], var_side[i][sat]);
    for (std::size_t r = 0; r < 2; ++r) {
      m.add(c_ids[i][sat][r], d_ids[i][sat][r]);
      m.add(b_ids[i][1 - sat][r], c_ids[i][1 - sat][r]);
    }
  }
  for (std::size_t j = 0; j < clause_x.size(); ++j) {
    int picked = -1;
    for (int r = 0; r < 3; ++r) {
      const int lit = clause_lits[j][static_cast<std::size_t>(r)];
      const bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
      if ((lit > 0) == value) {
        picked = r;
        break;
      }
    }
    if (picked < 0) throw std::invalid_argument("assignment does not satisfy clause");
    std::vector<int> rest;
    for (int r = 0; r < 3; ++r)
      if (r != picked) rest.push_back(r);
    m.add(clause_u[j], clause_x[j][static_cast<std::size_t>(rest[0])]);
    m.add(clause_w[j], clause_x[j][static_cast<std::size_t>(rest[1])]);
  }
  return m;
}

IsConstInstance is_to_egal_const(const SimpleGraph& g, int k, int c) {
  const int n = static_cast<int>(g.vertices.size());
  if (k < 1 || k > n) throw std::invalid_argument("independent set size must be in 1..|V|");
  if (c < 1) throw std::invalid_argument("constant cost must be >= 1");

  ProfileBuilder pb;
  IsConstInstance inst;
  inst.k = k;
  inst.c = c;
  inst.gamma = static_cast<long long>(c) * k;

  std::map<std::string, int> index;
  for (int v = 0; v < n; ++v) {
    if (index.count(g.vertices[static_cast<std::size_t>(v)]))
      throw std::invalid_argument("duplicate vertex name: " + g.vertices[static_cast<std::size_t>(v)]);
    index[g.vertices[static_cast<std::size_t>(v)]] = v;
    inst.vertex_agents.push_back(pb.add_agent(g.vertices[static_cast<std::size_t>(v)]));
  }
  for (int i = 0; i < n - k; ++i)
    inst.selector_agents.push_back(pb.add_agent("sel[i=" + std::to_string(i + 1) + "]"));

  auto& d1 = inst.dummy_first;
  auto& d2 = inst.dummy_second;
  d1.resize(static_cast<std::size_t>(n));
  d2.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < c; ++i) {
      const std::string tail = "[v=" + g.vertices[static_cast<std::size_t>(v)] + ",i=" + std::to_string(i + 1) + "]";
      d1[static_cast<std::size_t>(v)].push_back(pb.add_agent("d1" + tail));
      d2[static_cast<std::size_t>(v)].push_back(pb.add_agent("d2" + tail));
    }

  std::vector<std::set<int>> nbr(static_cast<std::size_t>(n));
  for (const auto& [xn, yn] : g.edges) {
    if (!index.count(xn) || !index.count(yn))
      throw std::invalid_argument("edge endpoint is not a vertex");
    const int x = index[xn], y = index[yn];
    if (x == y) continue;
    nbr[static_cast<std::size_t>(x)].insert(y);
    nbr[static_cast<std::size_t>(y)].insert(x);
  }

  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<AgentId>> groups;
    if (!inst.selector_agents.empty()) groups.push_back(inst.selector_agents);
    for (int i = 0; i < c; ++i) groups.push_back({d1[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]});
    if (!nbr[static_cast<std::size_t>(v)].empty()) {
      std::vector<AgentId> tie;
      for (int w : nbr[static_cast<std::size_t>(v)]) tie.push_back(inst.vertex_agents[static_cast<std::size_t>(w)]);
      groups.push_back(std::move(tie));
    }
    pb.set_prefs(inst.vertex_agents[static_cast<std::size_t>(v)], std::move(groups));
  }
  for (AgentId sel : inst.selector_agents) pb.set_prefs(sel, {inst.vertex_agents});
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < c; ++i) {
      pb.set_prefs(d1[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)],
                   {{d2[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]},
                    {inst.vertex_agents[static_cast<std::size_t>(v)]}});
      pb.set_prefs(d2[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)],
                   {{d1[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]}});
    }

  inst.profile = pb.build();
  return inst;
}

std::vector<std::string> IsConstInstance::decode(const Matching& m) const {
  std::set<AgentId> taken;
  for (AgentId sel : selector_agents) {
    const AgentId p = m.partner(sel);
    if (p != kNoAgent) taken.insert(p);
  }
  std::vector<std::string> out;
  for (AgentId v : vertex_agents)
    if (!taken.count(v)) out.push_back(profile.name(v));
  return out;
}

Matching IsConstInstance::witness_matching(const std::vector<std::string>& independent_set) const {
  std::set<std::string> chosen(independent_set.begin(), independent_set.end());
  Matching m(profile.agent_count());
  std::size_t sel = 0;
  for (AgentId v : vertex_agents) {
    if (chosen.count(profile.name(v))) continue;
    if (sel >= selector_agents.size())
      throw std::invalid_argument("independent set leaves too many vertices for the selectors");
    m.add(selector_agents[sel++], v);
  }
  if (sel != selector_agents.size())
    throw std::invalid_argument("independent set has the wrong size");
  for (std::size_t v = 0; v < dummy_first.size(); ++v)
    for (std::size_t i = 0; i < dummy_first[v].size(); ++i)
      m.add(dummy_first[v][i], dummy_second[v][i]);
  return m;
}

}  // namespace sr
