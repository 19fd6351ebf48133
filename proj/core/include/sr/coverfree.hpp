#ifndef SR_COVERFREE_HPP
#define SR_COVERFREE_HPP

#include <cstdint>
#include <vector>

#include "sr/model.hpp"

namespace sr {

struct FamilyStrategy {
  enum class Kind { Exhaustive, Randomized };

  Kind kind = Kind::Exhaustive;
  long long trials = 0;  // Randomized only; 0 means "derive from p and q"
  std::uint64_t seed = 0;

  static FamilyStrategy exhaustive() { return {Kind::Exhaustive, 0, 0}; }
  static FamilyStrategy randomized(long long trials, std::uint64_t seed) {
    return {Kind::Randomized, trials, seed};
  }
};

/// Trials needed so that a fixed challenge (S, S') with |S| = p + q, |S'| = p
/// survives unwitnessed with probability at most 2^-20, under per-element
/// inclusion probability p / (p + q).
long long default_trial_count(int p, int q);

/// A family of subsets of {0..universe_size-1} intended to satisfy the
/// (n, p, q) separation property: for every size-(p+q) set S and every
/// size-p subset S' of S, some member A has A n S = S'.
///
/// Exhaustive families enumerate all subsets lazily (exact property);
/// randomized families sample members with a seeded generator (property holds
/// with high probability). Member order is deterministic for a fixed strategy
/// and seed.
class CoverFreeFamily {
 public:
  int universe_size() const { return universe_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const FamilyStrategy& strategy() const { return strategy_; }

  std::size_t size() const;
  std::vector<int> member_elements(std::size_t index) const;
  /// Writes the indicator of member `index` into `out` (resized to universe).
  void member_indicator(std::size_t index, std::vector<char>& out) const;

  /// Wraps an explicit member list; used by tests and by callers that need a
  /// handcrafted family.
  static CoverFreeFamily explicit_members(int universe, int p, int q,
                                          std::vector<std::vector<int>> members);

  friend CoverFreeFamily build_family(int universe, int p, int q, FamilyStrategy strategy);

 private:
  int universe_ = 0, p_ = 0, q_ = 0;
  FamilyStrategy strategy_;
  bool lazy_exhaustive_ = false;
  std::vector<std::vector<int>> members_;  // explicit storage when not lazy
};

/// Exhaustive requests are capped at universe size 20 (2^20 members); beyond
/// that a CapacityError is thrown. p + q > universe is a domain error.
CoverFreeFamily build_family(int universe, int p, int q, FamilyStrategy strategy);

struct VerifyReport {
  long long checked = 0;
  long long failures = 0;
};

/// Samples `samples` random challenges (S, S') and counts those with no
/// witnessing member.
VerifyReport verify_property(const CoverFreeFamily& family, long long samples, std::uint64_t seed);

/// Checks every challenge; capped at universe size 12.
VerifyReport verify_property_full(const CoverFreeFamily& family);

}  // namespace sr

#endif
