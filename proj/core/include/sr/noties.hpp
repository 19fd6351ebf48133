#ifndef SR_NOTIES_HPP
#define SR_NOTIES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sr/model.hpp"

namespace sr {

/// A shrunk equivalent instance for the tie-free egalitarian problem.
struct Kernel {
  Profile profile;
  long long gamma_hat = 0;
  /// Kernel agent -> original agent; kNoAgent for dummy agents.
  std::vector<AgentId> origin;
  std::vector<AgentId> dummy_ids;  // kernel-space ids
  /// Ordered pairs (x, y) of original agents where x ranks y beyond gamma_hat,
  /// so y may never be matched to x within budget.
  std::vector<std::pair<AgentId, AgentId>> over_budget_pairs;
};

struct KernelOutcome {
  bool trivial_no = false;
  std::optional<Kernel> kernel;  // engaged iff !trivial_no

  static KernelOutcome no() { return {true, std::nullopt}; }
};

/// Shrinks a tie-free instance to at most 2*gamma_hat + 1 agents with lists of
/// at most gamma_hat + 1 entries, such that the original has a stable matching
/// of cost <= gamma iff the kernel has one of cost <= gamma_hat.
KernelOutcome kernelize(const Profile& profile, long long gamma);

struct BranchStats {
  long long nodes = 0;
  long long explored_pairs = 0;
  /// Stays true while every explored pair fits the remaining budget.
  bool budget_respected = true;
};

/// Depth-bounded branching over unmatched agents. Returns a minimum-cost
/// stable matching under ListLength semantics if its cost is at most gamma.
std::optional<EgalSolution> solve_egal_noties(const Profile& profile, long long gamma,
                                              BranchStats* stats = nullptr);

}  // namespace sr

#endif
