#include "sr/coverfree.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sr {

namespace {
constexpr int kExhaustiveCap = 20;
constexpr int kFullVerifyCap = 12;
}  // namespace

long long default_trial_count(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("p and q must be nonnegative");
  if (p == 0) return 1;  // the empty set alone witnesses every challenge
  const double rho = static_cast<double>(p) / static_cast<double>(p + q);
  const double hit = std::pow(rho, p) * std::pow(1.0 - rho, q);
  // (1 - hit)^T <= exp(-T * hit) <= 2^-20  when T >= 20 ln 2 / hit.
  const double t = std::ceil(20.0 * std::log(2.0) / hit);
  return static_cast<long long>(t);
}

std::size_t CoverFreeFamily::size() const {
  if (lazy_exhaustive_) return static_cast<std::size_t>(1) << universe_;
  return members_.size();
}

std::vector<int> CoverFreeFamily::member_elements(std::size_t index) const {
  if (lazy_exhaustive_) {
    std::vector<int> out;
    for (int e = 0; e < universe_; ++e)
      if (index >> e & 1u) out.push_back(e);
    return out;
  }
  return members_.at(index);
}

void CoverFreeFamily::member_indicator(std::size_t index, std::vector<char>& out) const {
  out.assign(static_cast<std::size_t>(universe_), 0);
  if (lazy_exhaustive_) {
    for (int e = 0; e < universe_; ++e)
      if (index >> e & 1u) out[static_cast<std::size_t>(e)] = 1;
    return;
  }
  for (int e : members_.at(index)) out[static_cast<std::size_t>(e)] = 1;
}

CoverFreeFamily CoverFreeFamily::explicit_members(int universe, int p, int q,
                                                  std::vector<std::vector<int>> members) {
  CoverFreeFamily f;
  f.universe_ = universe;
  f.p_ = p;
  f.q_ = q;
  f.strategy_ = FamilyStrategy::exhaustive();
  f.lazy_exhaustive_ = false;
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    for (int e : m)
      if (e < 0 || e >= universe) throw std::invalid_argument("member element outside universe");
  }
  f.members_ = std::move(members);
  return f;
}

CoverFreeFamily build_family(int universe, int p, int q, FamilyStrategy strategy) {
  if (universe < 0 || p < 0 || q < 0) throw std::invalid_argument("negative family parameter");
  if (p + q > universe)
    throw std::invalid_argument("cover-free family requires p + q <= universe size");

  CoverFreeFamily f;
  f.universe_ = universe;
  f.p_ = p;
  f.q_ = q;
  f.strategy_ = strategy;

  if (strategy.kind == FamilyStrategy::Kind::Exhaustive) {
    if (universe > kExhaustiveCap)
      throw CapacityError("exhaustive cover-free family capped at universe size " +
                          std::to_string(kExhaustiveCap));
    f.lazy_exhaustive_ = true;
    return f;
  }

  const long long trials = strategy.trials > 0 ? strategy.trials : default_trial_count(p, q);
  const double rho = p + q == 0 ? 0.0 : static_cast<double>(p) / static_cast<double>(p + q);
  std::mt19937_64 rng(strategy.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  f.members_.reserve(static_cast<std::size_t>(trials));
  for (long long t = 0; t < trials; ++t) {
    std::vector<int> member;
    for (int e = 0; e < universe; ++e)
      if (coin(rng) < rho) member.push_back(e);
    f.members_.push_back(std::move(member));
  }
  return f;
}

namespace {

bool challenge_witnessed(const CoverFreeFamily& family, const std::vector<int>& s,
                         const std::vector<char>& target_indicator) {
  const std::size_t count = family.size();
  std::vector<char> indicator;
  for (std::size_t i = 0; i < count; ++i) {
    family.member_indicator(i, indicator);
    bool ok = true;
    for (int e : s) {
      if (indicator[static_cast<std::size_t>(e)] != target_indicator[static_cast<std::size_t>(e)]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

VerifyReport verify_property(const CoverFreeFamily& family, long long samples, std::uint64_t seed) {
  VerifyReport report;
  const int n = family.universe_size();
  const int p = family.p();
  const int q = family.q();
  if (p + q > n) throw std::invalid_argument("family parameters exceed universe");

  std::mt19937_64 rng(seed);
  std::vector<int> universe(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) universe[static_cast<std::size_t>(e)] = e;

  std::vector<char> target(static_cast<std::size_t>(n), 0);
  for (long long it = 0; it < samples; ++it) {
    std::shuffle(universe.begin(), universe.end(), rng);
    std::vector<int> s(universe.begin(), universe.begin() + (p + q));
    std::fill(target.begin(), target.end(), 0);
    // First p elements of the shuffled prefix form S'.
    for (int i = 0; i < p; ++i) target[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] = 1;
    ++report.checked;
    if (!challenge_witnessed(family, s, target)) ++report.failures;
  }
  return report;
}

VerifyReport verify_property_full(const CoverFreeFamily& family) {
  const int n = family.universe_size();
  const int p = family.p();
  const int q = family.q();
  if (n > kFullVerifyCap)
    throw CapacityError("full cover-free verification capped at universe size " +
                        std::to_string(kFullVerifyCap));

  VerifyReport report;
  std::vector<char> target(static_cast<std::size_t>(n), 0);
  // Enumerate every size-(p+q) set S and every size-p subset S' of S.
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t s_mask = 0; s_mask < limit; ++s_mask) {
    if (__builtin_popcount(s_mask) != p + q) continue;
    std::vector<int> s;
    for (int e = 0; e < n; ++e)
      if (s_mask >> e & 1u) s.push_back(e);
    // Subsets of s_mask of size p.
    for (std::uint32_t sub = s_mask;; sub = (sub - 1) & s_mask) {
      if (__builtin_popcount(sub) == p) {
        std::fill(target.begin(), target.end(), 0);
        for (int e = 0; e < n; ++e)
          if (sub >> e & 1u) target[static_cast<std::size_t>(e)] = 1;
        ++report.checked;
        if (!challenge_witnessed(family, s, target)) ++report.failures;
      }
      if (sub == 0) break;
    }
  }
  return report;
}

}  // namespace sr
