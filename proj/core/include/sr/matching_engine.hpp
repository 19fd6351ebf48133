#ifndef SR_MATCHING_ENGINE_HPP
#define SR_MATCHING_ENGINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sr/model.hpp"

namespace sr {

/// Undirected weighted graph with nonnegative integer weights, no self-loops
/// and no parallel edges.
struct WeightedGraph {
  struct Edge {
    int u, v;
    long long weight;
  };

  int vertex_count = 0;
  std::vector<Edge> edges;
};

void validate_graph(const WeightedGraph& g);

/// Exact minimum-cost perfect matching on a general graph.
///
/// Solved by dynamic programming over vertex subsets, which is exact for any
/// graph but capped at 24 vertices (CapacityError beyond). Ties between
/// optimal matchings break lexicographically on the sorted pair list, so the
/// output is deterministic.
std::optional<std::pair<Matching, long long>> min_cost_perfect_matching(const WeightedGraph& g);

/// Largest vertex count min_cost_perfect_matching accepts.
int matching_engine_capacity();

}  // namespace sr

#endif
