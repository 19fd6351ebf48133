#include "doctest.h"
#include "sr/coverfree.hpp"

using namespace sr;

TEST_CASE("exhaustive family enumerates every subset") {
  const CoverFreeFamily f = build_family(4, 1, 1, FamilyStrategy::exhaustive());
  CHECK(f.size() == 16);
  const auto report = verify_property_full(f);
  CHECK(report.failures == 0);
  CHECK(report.checked > 0);
}

TEST_CASE("p = 0 is witnessed by the empty set alone") {
  const CoverFreeFamily only_empty = CoverFreeFamily::explicit_members(6, 0, 3, {{}});
  const auto report = verify_property_full(only_empty);
  CHECK(report.failures == 0);
  CHECK(default_trial_count(0, 5) == 1);
}

TEST_CASE("a too-small family fails verification") {
  const CoverFreeFamily bad = CoverFreeFamily::explicit_members(2, 1, 1, {{}});
  const auto report = verify_property_full(bad);
  CHECK(report.failures > 0);
  const auto sampled = verify_property(bad, 50, 99);
  CHECK(sampled.failures > 0);
}

TEST_CASE("randomized family passes sampled challenges") {
  const CoverFreeFamily f = build_family(20, 2, 4, FamilyStrategy::randomized(4096, 7));
  CHECK(f.size() == 4096);
  const auto report = verify_property(f, 1000, 13);
  CHECK(report.checked == 1000);
  CHECK(report.failures == 0);
}

TEST_CASE("derived trial counts cover a fixed challenge") {
  // rho = 1/3, hit chance (1/3)^2 (2/3)^4 ~ 0.0219: a few hundred trials.
  const long long t = default_trial_count(2, 4);
  CHECK(t >= 300);
  CHECK(t <= 5000);
  const CoverFreeFamily f = build_family(12, 2, 4, FamilyStrategy::randomized(0, 5));
  CHECK(f.size() == static_cast<std::size_t>(t));
  CHECK(verify_property_full(f).failures == 0);
}

TEST_CASE("membership iteration is deterministic per strategy and seed") {
  const CoverFreeFamily a = build_family(15, 2, 3, FamilyStrategy::randomized(200, 17));
  const CoverFreeFamily b = build_family(15, 2, 3, FamilyStrategy::randomized(200, 17));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.member_elements(i) == b.member_elements(i));
  const CoverFreeFamily c = build_family(15, 2, 3, FamilyStrategy::randomized(200, 18));
  bool all_same = true;
  for (std::size_t i = 0; i < a.size(); ++i) all_same &= a.member_elements(i) == c.member_elements(i);
  CHECK_FALSE(all_same);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_family(3, 2, 2, FamilyStrategy::exhaustive()), std::invalid_argument);
  CHECK_THROWS_AS(build_family(30, 2, 2, FamilyStrategy::exhaustive()), CapacityError);
  CHECK_THROWS_AS(verify_property_full(build_family(14, 2, 2, FamilyStrategy::randomized(10, 1))),
                  CapacityError);
}
