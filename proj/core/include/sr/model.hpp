#ifndef SR_MODEL_HPP
#define SR_MODEL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sr {

using AgentId = int;

/// Sentinel for "no partner" in matchings and for the bottom argument of rank_of.
inline constexpr AgentId kNoAgent = -1;

/// Thrown when an exhaustive procedure is asked to run beyond its configured size cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// How unmatched agents are priced in the egalitarian cost.
struct CostSemantics {
  enum class Kind { ListLength, Zero, Constant };

  Kind kind = Kind::ListLength;
  int constant = 0;

  static CostSemantics list_length() { return {Kind::ListLength, 0}; }
  static CostSemantics zero() { return {Kind::Zero, 0}; }
  static CostSemantics constant_cost(int c) {
    if (c < 1) throw std::invalid_argument("constant unmatched cost must be >= 1");
    return {Kind::Constant, c};
  }

  bool operator==(const CostSemantics&) const = default;
};

/// An ordered sequence of tie groups, earlier groups strictly preferred.
/// Canonical form keeps ids inside each group sorted ascending.
struct PreferenceList {
  std::vector<std::vector<AgentId>> groups;

  bool empty() const { return groups.empty(); }
  std::size_t length() const;                    // number of listed agents
  std::vector<AgentId> flat() const;             // group order, ids ascending within a group
  bool contains(AgentId who) const;
  bool has_tie() const;

  bool operator==(const PreferenceList&) const = default;
};

/// A full preference profile: one list per agent, mutual acceptability enforced
/// by validate(). Names are for I/O; internally everything is dense 0..n-1.
struct Profile {
  std::vector<PreferenceList> lists;
  std::vector<std::string> names;

  int agent_count() const { return static_cast<int>(lists.size()); }
  const std::string& name(AgentId a) const { return names[static_cast<std::size_t>(a)]; }

  bool has_ties() const;
  bool acceptable(AgentId owner, AgentId target) const;
  /// All acceptability edges as (u, v) with u < v, sorted.
  std::vector<std::pair<AgentId, AgentId>> edges() const;

  bool operator==(const Profile&) const = default;
};

/// Builds a profile from per-agent tie groups, canonicalizes and validates it.
/// Names default to "1".."n".
Profile make_profile(std::vector<std::vector<std::vector<AgentId>>> groups,
                     std::vector<std::string> names = {});

/// Throws std::invalid_argument naming the offending agent if the profile is
/// malformed: empty or self-referencing lists, duplicate entries, or a pair
/// that is not mutually acceptable.
void validate_profile(const Profile& profile);

/// A set of disjoint pairs over the agents of one profile.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int agent_count) : partner_(static_cast<std::size_t>(agent_count), kNoAgent) {}

  static Matching from_pairs(int agent_count, const std::vector<std::pair<AgentId, AgentId>>& pairs);

  void add(AgentId x, AgentId y);
  void remove(AgentId x, AgentId y);
  AgentId partner(AgentId x) const { return partner_[static_cast<std::size_t>(x)]; }
  bool matched(AgentId x) const { return partner(x) != kNoAgent; }
  bool contains(AgentId x, AgentId y) const { return matched(x) && partner(x) == y; }
  int agent_count() const { return static_cast<int>(partner_.size()); }
  std::size_t pair_count() const;

  /// Pairs as (u, v) with u < v, sorted: the canonical form used for
  /// comparisons, hashing and serialization.
  std::vector<std::pair<AgentId, AgentId>> pairs() const;

  bool operator==(const Matching& other) const { return partner_ == other.partner_; }
  /// Lexicographic on the canonical pair list; used for deterministic tie-breaks.
  bool operator<(const Matching& other) const { return pairs() < other.pairs(); }

 private:
  std::vector<AgentId> partner_;
};

/// A matching plus its egalitarian cost; shared result type of all solvers.
struct EgalSolution {
  Matching matching;
  long long cost = 0;
};

/// rank_owner(target): number of agents the owner strictly prefers to target.
/// target == kNoAgent yields the owner's list length (the ListLength price of
/// being unmatched; Zero/Constant pricing is applied by egalitarian_cost).
int rank_of(const Profile& profile, AgentId owner, AgentId target);

/// True iff {x, y} would block m: both sides strictly prefer each other to
/// their current state. The pair must be mutually acceptable and unmatched.
bool is_blocking(const Profile& profile, const Matching& m, AgentId x, AgentId y);

std::vector<std::pair<AgentId, AgentId>> blocking_pairs(const Profile& profile, const Matching& m);
bool is_stable(const Profile& profile, const Matching& m);
bool is_perfect(const Profile& profile, const Matching& m);
std::vector<AgentId> blocking_agents(const Profile& profile, const Matching& m);

long long egalitarian_cost(const Profile& profile, const Matching& m,
                           const CostSemantics& semantics = CostSemantics::list_length());

/// Checks that m only uses acceptability edges of the profile.
void validate_matching(const Profile& profile, const Matching& m);

}  // namespace sr

#endif
