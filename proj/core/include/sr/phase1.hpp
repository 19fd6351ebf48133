#ifndef SR_PHASE1_HPP
#define SR_PHASE1_HPP

#include <utility>
#include <vector>

#include "sr/model.hpp"

namespace sr {

/// Output of the marking procedure for tie-free profiles. Marks live at pair
/// level: marking {u, w} marks u in w's list and w in u's list.
struct Phase1Result {
  std::vector<std::vector<char>> marked;           // n x n, symmetric
  std::vector<AgentId> first_unmarked;             // per agent; kNoAgent if whole list marked
  std::vector<AgentId> last_unmarked;
  std::vector<std::pair<AgentId, AgentId>> fixed_pairs;  // mutual first_unmarked, u < v, sorted
  std::vector<AgentId> marked_agents;              // whole list marked
  std::vector<AgentId> unmarked_agents;            // at least one unmarked entry

  bool pair_marked(AgentId x, AgentId y) const {
    return marked[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != 0;
  }
  bool agent_fixed(AgentId x) const;
};

/// Runs the marking loop to its fixpoint. The result is independent of the
/// agent iteration order; the default order is ascending id.
/// Throws std::invalid_argument if the profile has ties.
Phase1Result run_phase1(const Profile& profile);
Phase1Result run_phase1(const Profile& profile, const std::vector<AgentId>& agent_order);

/// Marking loop over explicit strict lists. Used on derived instances (edge
/// deletions) where agents may end up isolated; empty lists are allowed and
/// such agents land in marked_agents.
Phase1Result run_phase1_lists(const std::vector<std::vector<AgentId>>& prefs);

/// True iff the marking already proves there is no stable matching with
/// egalitarian cost at most gamma: more than gamma agents have fully marked
/// lists, or some agent's best unmarked entry alone costs more than gamma.
bool phase1_no_instance(const Profile& profile, const Phase1Result& result, long long gamma);

}  // namespace sr

#endif
