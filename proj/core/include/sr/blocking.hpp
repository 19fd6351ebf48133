#ifndef SR_BLOCKING_HPP
#define SR_BLOCKING_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sr/model.hpp"

namespace sr {

struct BlockingCertificate {
  Matching matching;
  std::vector<std::pair<AgentId, AgentId>> pairs;  // == blocking_pairs(profile, matching)
  std::vector<AgentId> agents;                     // union of pairs
};

/// Enumerates the stable matchings of a tie-free profile with the pairs in
/// `banned` treated as deleted acceptability edges ("stable" then means no
/// blocking pair outside `banned`). Backtracking over the phase-1 structure
/// of the residual instance; visiting stops when the visitor returns true.
void for_each_stable_tiefree(const Profile& profile,
                             const std::vector<std::pair<AgentId, AgentId>>& banned,
                             const std::function<bool(const Matching&)>& visit);

std::vector<Matching> enumerate_stable_tiefree(
    const Profile& profile, const std::vector<std::pair<AgentId, AgentId>>& banned = {});

/// A matching whose blocking-pair set is exactly `target`, or nullopt.
/// The returned matching is re-checked against the definition before return.
std::optional<Matching> exact_blocking_set_feasible(
    const Profile& profile, const std::vector<std::pair<AgentId, AgentId>>& target);

/// Minimizes the number of blocking pairs by enumerating candidate blocking
/// sets of size 0..max_pairs (by size, then lexicographically on the sorted
/// edge list) and testing each for feasibility.
std::optional<BlockingCertificate> min_blocking_pairs(const Profile& profile, int max_pairs);

/// Minimizes the number of blocking agents: guesses the agent set, then the
/// blocking pairs inside it, then tests feasibility.
std::optional<BlockingCertificate> min_blocking_agents(const Profile& profile, int max_agents);

}  // namespace sr

#endif
