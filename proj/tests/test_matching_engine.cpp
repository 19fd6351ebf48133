#include <optional>
#include <random>

#include "doctest.h"
#include "sr/matching_engine.hpp"

using namespace sr;

namespace {

// Brute force over all perfect matchings.
std::optional<long long> brute_min_cost(const WeightedGraph& g) {
  const int n = g.vertex_count;
  if (n % 2 != 0) return std::nullopt;
  std::vector<std::vector<long long>> w(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n), -1));
  for (const auto& e : g.edges)
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
        w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.weight;
  std::optional<long long> best;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int covered, long long acc) -> void {
    if (covered == n) {
      if (!best || acc < *best) best = acc;
      return;
    }
    int i = 0;
    while (used[static_cast<std::size_t>(i)]) ++i;
    used[static_cast<std::size_t>(i)] = 1;
    for (int j = i + 1; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)] || w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < 0) continue;
      used[static_cast<std::size_t>(j)] = 1;
      self(self, covered + 2, acc + w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      used[static_cast<std::size_t>(j)] = 0;
    }
    used[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

WeightedGraph random_graph(std::mt19937_64& rng, int n, double density, long long max_w) {
  WeightedGraph g;
  g.vertex_count = n;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long long> wd(0, max_w);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < density) g.edges.push_back({u, v, wd(rng)});
  return g;
}

}  // namespace

TEST_CASE("trivial graphs") {
  WeightedGraph odd;
  odd.vertex_count = 3;
  odd.edges = {{0, 1, 1}, {1, 2, 1}};
  CHECK_FALSE(min_cost_perfect_matching(odd).has_value());

  WeightedGraph two;
  two.vertex_count = 2;
  two.edges = {{0, 1, 5}};
  const auto got = min_cost_perfect_matching(two);
  REQUIRE(got.has_value());
  CHECK(got->second == 5);
  CHECK(got->first.contains(0, 1));

  WeightedGraph empty;
  empty.vertex_count = 0;
  CHECK(min_cost_perfect_matching(empty)->second == 0);

  WeightedGraph disconnected;
  disconnected.vertex_count = 4;
  disconnected.edges = {{0, 1, 1}};
  CHECK_FALSE(min_cost_perfect_matching(disconnected).has_value());
}

TEST_CASE("agrees with brute force on random six-vertex graphs, 100 seeds") {
  for (int seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) + 1000);
    const WeightedGraph g = random_graph(rng, 6, 0.6, 20);
    const auto fast = min_cost_perfect_matching(g);
    const auto slow = brute_min_cost(g);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(fast->second == *slow);
  }
}

TEST_CASE("never beaten by an enumerated perfect matching (n <= 10)") {
  std::mt19937_64 rng(31337);
  for (int it = 0; it < 60; ++it) {
    std::uniform_int_distribution<int> nd(1, 5);
    const WeightedGraph g = random_graph(rng, 2 * nd(rng), 0.7, 50);
    const auto fast = min_cost_perfect_matching(g);
    const auto slow = brute_min_cost(g);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(fast->second == *slow);
      CHECK(fast->first.pair_count() == static_cast<std::size_t>(g.vertex_count) / 2);
    }
  }
}

TEST_CASE("deterministic lexicographic tie-break") {
  // Two optimal matchings: {0-1, 2-3} and {0-2, 1-3}, both cost 2.
  WeightedGraph g;
  g.vertex_count = 4;
  g.edges = {{0, 1, 1}, {2, 3, 1}, {0, 2, 1}, {1, 3, 1}};
  const auto got = min_cost_perfect_matching(g);
  REQUIRE(got.has_value());
  CHECK(got->second == 2);
  CHECK(got->first.contains(0, 1));
  CHECK(got->first.contains(2, 3));
}

TEST_CASE("input validation and capacity") {
  WeightedGraph loop;
  loop.vertex_count = 2;
  loop.edges = {{0, 0, 1}};
  CHECK_THROWS_AS(min_cost_perfect_matching(loop), std::invalid_argument);

  WeightedGraph parallel;
  parallel.vertex_count = 2;
  parallel.edges = {{0, 1, 1}, {1, 0, 2}};
  CHECK_THROWS_AS(min_cost_perfect_matching(parallel), std::invalid_argument);

  WeightedGraph big;
  big.vertex_count = matching_engine_capacity() + 2;
  for (int i = 0; i + 1 < big.vertex_count; i += 2) big.edges.push_back({i, i + 1, 0});
  CHECK_THROWS_AS(min_cost_perfect_matching(big), CapacityError);
}
