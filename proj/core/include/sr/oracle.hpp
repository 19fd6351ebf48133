#ifndef SR_ORACLE_HPP
#define SR_ORACLE_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sr/model.hpp"

namespace sr {

/// Size guard for the exhaustive solvers; enlarge deliberately in callers
/// that know the enumeration stays tractable.
struct OracleLimits {
  int max_agents = 10;
  int max_edges = 12;
};

/// Visits every matching of the acceptability graph exactly once.
/// Throws CapacityError beyond the limits. Visiting stops early when the
/// visitor returns true.
void for_each_matching(const Profile& profile, const OracleLimits& limits,
                       const std::function<bool(const Matching&)>& visit);

/// All stable matchings, sorted lexicographically.
std::vector<Matching> all_stable_matchings(const Profile& profile, const OracleLimits& limits = {});

/// Minimum-cost stable matching under the given semantics, or nullopt when no
/// stable matching exists. Ties break lexicographically.
std::optional<EgalSolution> opt_egal_brute(const Profile& profile, const CostSemantics& semantics,
                                           const OracleLimits& limits = {});

/// Matching minimizing the number of blocking pairs over all matchings.
std::pair<Matching, int> min_bp_brute(const Profile& profile, const OracleLimits& limits = {});

/// Matching minimizing the number of blocking agents over all matchings.
std::pair<Matching, int> min_ba_brute(const Profile& profile, const OracleLimits& limits = {});

}  // namespace sr

#endif
