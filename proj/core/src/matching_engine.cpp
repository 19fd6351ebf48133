#include "sr/matching_engine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace sr {

namespace {
constexpr int kMaxVertices = 24;
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}  // namespace

int matching_engine_capacity() { return kMaxVertices; }

void validate_graph(const WeightedGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count || e.v >= g.vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    if (e.weight < 0) throw std::invalid_argument("negative edge weight");
    if (!seen.insert(std::minmax(e.u, e.v)).second)
      throw std::invalid_argument("parallel edge");
  }
}

std::optional<std::pair<Matching, long long>> min_cost_perfect_matching(const WeightedGraph& g) {
  validate_graph(g);
  const int n = g.vertex_count;
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return std::make_pair(Matching(0), 0LL);
  if (n > kMaxVertices)
    throw CapacityError("matching engine capped at " + std::to_string(kMaxVertices) + " vertices");

  std::vector<std::vector<long long>> w(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n), kInf));
  for (const auto& e : g.edges)
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
        w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.weight;

  // dp[mask] = cheapest perfect matching of the vertex set `mask`.
  // Always pair the lowest vertex of the mask; partners scan in ascending
  // order and relax strictly, so reconstruction picks the lexicographically
  // smallest optimal matching.
  const std::size_t full = static_cast<std::size_t>(1) << n;
  std::vector<long long> dp(full, kInf);
  dp[0] = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (__builtin_popcountll(mask) % 2 != 0) continue;
    const int i = __builtin_ctzll(mask);
    long long best = kInf;
    for (int j = i + 1; j < n; ++j) {
      if (!(mask >> j & 1u)) continue;
      if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == kInf) continue;
      const std::size_t rest = mask & ~(static_cast<std::size_t>(1) << i) & ~(static_cast<std::size_t>(1) << j);
      if (dp[rest] == kInf) continue;
      best = std::min(best, dp[rest] + w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    dp[mask] = best;
  }

  if (dp[full - 1] == kInf) return std::nullopt;

  Matching m(n);
  std::size_t mask = full - 1;
  while (mask != 0) {
    const int i = __builtin_ctzll(mask);
    for (int j = i + 1; j < n; ++j) {
      if (!(mask >> j & 1u)) continue;
      if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == kInf) continue;
      const std::size_t rest = mask & ~(static_cast<std::size_t>(1) << i) & ~(static_cast<std::size_t>(1) << j);
      if (dp[rest] != kInf &&
          dp[rest] + w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == dp[mask]) {
        m.add(i, j);
        mask = rest;
        break;
      }
    }
  }
  return std::make_pair(std::move(m), dp[full - 1]);
}

}  // namespace sr
