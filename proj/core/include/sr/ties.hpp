#ifndef SR_TIES_HPP
#define SR_TIES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sr/coverfree.hpp"
#include "sr/model.hpp"

namespace sr {

/// Acceptability edges split by combined rank: zero (cost 0), costly
/// (cost 1..gamma) and discarded (cost above gamma).
struct EdgeClassification {
  std::vector<std::pair<AgentId, AgentId>> zero_edges;
  std::vector<std::pair<AgentId, AgentId>> costly_edges;
  std::vector<std::pair<AgentId, AgentId>> discarded;
};

EdgeClassification classify_edges(const Profile& profile, long long gamma);

/// Combined rank of an acceptability edge.
long long edge_cost(const Profile& profile, AgentId u, AgentId v);

/// Edge {u, v} is critical for u when the worst-case rank of v over all
/// linearizations of u's ties exceeds gamma, i.e. more than gamma agents are
/// weakly preferred to v by u (v itself excluded).
bool edge_critical_for(const Profile& profile, long long gamma, AgentId u, AgentId v);

/// Two disjoint edges block each other when placing both in a matching would
/// induce a blocking pair between some pair of their endpoints.
bool edges_block_each_other(const Profile& profile, std::pair<AgentId, AgentId> e,
                            std::pair<AgentId, AgentId> f);

/// Appends tie-broken padding agents so that a stable matching of cost at
/// most gamma exists iff a perfect one does in the output. Adds at most gamma
/// agents: agents with at most gamma acceptable partners accept the padding
/// agents as a final tie group, and padding agents hold everything they
/// accept in one top tie group.
Profile perfectness_reduction(const Profile& profile, long long gamma);

struct SolveOptions {
  enum class Family { Auto, Exhaustive, Randomized };

  Family family = Family::Auto;
  long long trials = 0;       // Randomized: 0 derives the count from (p, q)
  std::uint64_t seed = 0;
  bool optimal = false;       // scan every separation instead of first success
  int jobs = 1;
};

/// Random-separation solver for preferences with ties and incomplete lists
/// under ListLength semantics. Returns a stable matching of cost at most
/// gamma if one exists: guaranteed with the Exhaustive family strategy, with
/// high probability under Randomized. The returned matching is re-validated
/// for stability and cost before it is handed out.
///
/// Requires an even number of agents. Zero-cost-unmatched semantics has no
/// solver here: it is NP-hard already at gamma = 0, so only the brute-force
/// oracle handles it.
std::optional<EgalSolution> solve_egal_ties(const Profile& profile, long long gamma,
                                            const SolveOptions& options = {});

/// Core of the algorithm: requires the returned matching to be perfect.
/// Used directly by the constant-cost wrapper, which must not pad.
std::optional<EgalSolution> solve_perfect_egal(const Profile& profile, long long gamma,
                                               const SolveOptions& options = {});

/// Constant-cost-per-unmatched-agent variant: guesses the unmatched set A
/// (|A| <= gamma / c), trims dominated entries and searches the residual for
/// a perfect stable matching within the remaining budget. Returns the optimal
/// solution under Constant(c) semantics when the optimum is at most gamma.
std::optional<EgalSolution> solve_egal_constant(const Profile& profile, long long gamma, int c,
                                                const SolveOptions& options = {});

/// Edges of combined rank <= gamma that some matched edge harmlessly blocks:
/// the blocked edge is harmless at the endpoint forming the blocking pair.
std::vector<std::pair<AgentId, AgentId>> harmlessly_blocked_edges(const Profile& profile,
                                                                  long long gamma,
                                                                  const Matching& m);

/// Endpoints of non-matching edges of combined rank <= gamma that form a
/// blocking pair with an endpoint of a matched edge.
std::vector<AgentId> culprits(const Profile& profile, long long gamma, const Matching& m);

}  // namespace sr

#endif
