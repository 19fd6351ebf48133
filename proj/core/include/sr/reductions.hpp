#ifndef SR_REDUCTIONS_HPP
#define SR_REDUCTIONS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sr/model.hpp"

namespace sr {

/// Incremental profile construction for the gadget generators: agents first,
/// preference lists as they become known, full validation on build().
class ProfileBuilder {
 public:
  AgentId add_agent(const std::string& name);
  AgentId id(const std::string& name) const;
  bool has_agent(const std::string& name) const;
  const std::string& name(AgentId a) const { return names_[static_cast<std::size_t>(a)]; }
  int agent_count() const { return static_cast<int>(names_.size()); }

  void set_prefs(AgentId agent, std::vector<std::vector<AgentId>> groups);
  bool prefs_set(AgentId agent) const;

  Profile build() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, AgentId> by_name_;
  std::vector<std::vector<std::vector<AgentId>>> groups_;
  std::vector<char> set_;
};

/// Vertex-selection gadget: an odd ring of a-agents, each backed by a c/d
/// pendant pair and pointing at one externally owned u-agent. Every matching
/// on it has a blocking pair inside the a-ring. The u-agents' lists are left
/// to the caller.
struct SelectorGadget {
  std::vector<AgentId> a, c, d;
  /// Ring pairs {a^{i-1}, a^i}: the candidate blocking pairs the gadget forces.
  std::vector<std::pair<AgentId, AgentId>> ring_pairs() const;
};

SelectorGadget selector_gadget(ProfileBuilder& pb, int n_prime,
                               const std::vector<AgentId>& u_agents, const std::string& a_role,
                               const std::string& c_role, const std::string& d_role,
                               const std::string& tag);

/// Duplicating chain: a ring of 2*delta+2 x-agents that links the endpoint
/// agents a and b and exposes delta y-slots for cross-gadget wiring. A slot
/// holding kNoAgent is simply omitted from the list.
struct VertexGadget {
  std::vector<AgentId> x;
};

VertexGadget vertex_gadget(ProfileBuilder& pb, int delta, AgentId a, AgentId b,
                           const std::vector<AgentId>& y_slots, const std::string& tag);

struct ColoredGraph {
  std::vector<std::vector<std::string>> classes;
  std::vector<std::pair<std::string, std::string>> edges;

  int total_vertices() const;
};

struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Multicolored-independent-set to minimum-blocking-pairs instance. The
/// output is tie-free with preference lists of length at most five, and every
/// matching carries at least one ring blocking pair per selector gadget.
struct McisMbpInstance {
  Profile profile;
  int beta = 0;  // 2k
  int k = 0;
  int n_prime = 0;
  std::vector<std::vector<std::string>> class_vertices;  // padded, [class][index]
  std::vector<std::vector<char>> is_padding;
  std::vector<std::vector<AgentId>> a_ids, b_ids, c_ids, d_ids, f_ids, w_ids;  // [class][index]
  std::vector<std::vector<std::vector<AgentId>>> u_ids;  // [class][index][ring position]

  /// Vertices whose selection edge {a, u0} is matched.
  std::vector<std::string> decode(const Matching& m) const;
  /// The proof's matching for one chosen vertex index per class; it has
  /// exactly the 2k ring blocking pairs of expected_blocking_pairs().
  Matching witness_matching(const std::vector<int>& chosen) const;
  std::vector<std::pair<AgentId, AgentId>> expected_blocking_pairs(
      const std::vector<int>& chosen) const;
  /// Ring pairs per selector gadget (2k gadgets): every matching's blocking
  /// set hits each gadget's list at least once.
  std::vector<std::vector<std::pair<AgentId, AgentId>>> ring_pair_candidates() const;
};

McisMbpInstance mcis_to_mbp(const ColoredGraph& g);

/// 3SAT (every literal exactly twice, three literals per clause) to
/// zero-cost egalitarian stable matching on a bipartite profile with ties,
/// maximum degree three. Satisfiable iff a stable matching of Zero-semantics
/// cost 0 exists.
struct CnfFormula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;  // literals: +v / -v, 1-based
};

struct Sat3EgalInstance {
  Profile profile;
  long long gamma = 0;                  // always 0
  std::vector<AgentId> var_hub;         // per variable
  std::vector<std::array<AgentId, 2>> var_side;  // [variable][0=true, 1=false]
  /// Pendant chain agents, [variable][sign][occurrence].
  std::vector<std::array<std::array<AgentId, 2>, 2>> b_ids, c_ids, d_ids;
  std::vector<AgentId> clause_u, clause_w;
  std::vector<std::array<AgentId, 3>> clause_x;
  std::vector<std::array<int, 3>> clause_lits;  // signed literal per slot

  std::vector<bool> decode(const Matching& m) const;  // x_i := hub matched to true side
  /// The proof's zero-cost stable matching for a satisfying assignment.
  Matching witness_matching(const std::vector<bool>& assignment) const;
};

Sat3EgalInstance sat3_to_egal_zero(const CnfFormula& formula);

/// Independent set to constant-cost egalitarian stable roommates:
/// g has a k-independent set iff the instance has a stable matching of
/// Constant(c) cost at most c*k.
struct IsConstInstance {
  Profile profile;
  long long gamma = 0;  // c * k
  int k = 0;
  int c = 0;
  std::vector<AgentId> vertex_agents;
  std::vector<AgentId> selector_agents;
  std::vector<std::vector<AgentId>> dummy_first, dummy_second;  // [vertex][1..c]

  std::vector<std::string> decode(const Matching& m) const;  // vertices not taken by selectors
  Matching witness_matching(const std::vector<std::string>& independent_set) const;
};

IsConstInstance is_to_egal_const(const SimpleGraph& g, int k, int c);

}  // namespace sr

#endif
