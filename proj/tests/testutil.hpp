#ifndef SR_TESTUTIL_HPP
#define SR_TESTUTIL_HPP

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sr/model.hpp"

namespace srtest {

// The three four-agent instances used throughout: incomplete strict,
// incomplete with ties, complete strict with no stable matching.
inline sr::Profile fig1_left() {
  return sr::make_profile({
      {{1}, {2}, {3}},  // 1: 2 > 3 > 4
      {{2}, {0}},       // 2: 3 > 1
      {{3}, {1}, {0}},  // 3: 4 > 2 > 1
      {{0}, {2}},       // 4: 1 > 3
  });
}

inline sr::Profile fig1_middle() {
  return sr::make_profile({
      {{1, 2}, {3}},  // 1: 2 ~ 3 > 4
      {{0}, {2}},     // 2: 1 > 3
      {{0, 1}, {3}},  // 3: 1 ~ 2 > 4
      {{2}, {0}},     // 4: 3 > 1
  });
}

inline sr::Profile fig1_right() {
  return sr::make_profile({
      {{1}, {2}, {3}},
      {{2}, {0}, {3}},
      {{0}, {1}, {3}},
      {{0}, {1}, {2}},
  });
}

// Ten agents, incomplete, no ties; two stable matchings of costs 10 and 8.
inline sr::Profile example1() {
  return sr::make_profile({
      {{5}, {1}, {6}, {3}, {9}, {2}, {4}, {7}, {8}},  // 1: 6 2 7 4 10 3 5 8 9
      {{6}, {7}, {5}, {0}},                           // 2: 7 8 6 1
      {{7}, {5}, {0}, {6}},                           // 3: 8 6 1 7
      {{0}},                                          // 4: 1
      {{9}, {0}},                                     // 5: 10 1
      {{1}, {2}, {0}, {7}},                           // 6: 2 3 1 8
      {{2}, {0}, {7}, {1}},                           // 7: 3 1 8 2
      {{1}, {5}, {6}, {2}, {0}},                      // 8: 2 6 7 3 1
      {{0}},                                          // 9: 1
      {{4}, {0}},                                     // 10: 5 1
  });
}

inline sr::Matching mk(const sr::Profile& p,
                       const std::vector<std::pair<sr::AgentId, sr::AgentId>>& pairs) {
  return sr::Matching::from_pairs(p.agent_count(), pairs);
}

// Random acceptability graph with no isolated vertex, strict random lists.
inline sr::Profile random_tiefree(std::mt19937_64& rng, int max_n, int max_edges) {
  for (;;) {
    std::uniform_int_distribution<int> nd(2, max_n);
    const int n = nd(rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double density = 0.25 + 0.5 * coin(rng);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < density) edges.emplace_back(u, v);
    if (static_cast<int>(edges.size()) > max_edges) continue;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto& [u, v] : edges) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    bool isolated = false;
    for (auto& a : adj) isolated |= a.empty();
    if (isolated) continue;
    std::vector<std::vector<std::vector<sr::AgentId>>> groups(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      auto& nb = adj[static_cast<std::size_t>(u)];
      std::shuffle(nb.begin(), nb.end(), rng);
      for (int v : nb) groups[static_cast<std::size_t>(u)].push_back({v});
    }
    return sr::make_profile(std::move(groups));
  }
}

// As above but with tie groups; even_n forces an even agent count.
inline sr::Profile random_ties(std::mt19937_64& rng, int max_n, int max_edges, bool even_n) {
  for (;;) {
    std::uniform_int_distribution<int> nd(2, max_n);
    int n = nd(rng);
    if (even_n && n % 2 != 0) n = n == max_n ? n - 1 : n + 1;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double density = 0.25 + 0.5 * coin(rng);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < density) edges.emplace_back(u, v);
    if (static_cast<int>(edges.size()) > max_edges) continue;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto& [u, v] : edges) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    bool isolated = false;
    for (auto& a : adj) isolated |= a.empty();
    if (isolated) continue;
    std::vector<std::vector<std::vector<sr::AgentId>>> groups(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      auto& nb = adj[static_cast<std::size_t>(u)];
      std::shuffle(nb.begin(), nb.end(), rng);
      std::vector<sr::AgentId> tie;
      for (int v : nb) {
        if (!tie.empty() && coin(rng) < 0.55) {
          groups[static_cast<std::size_t>(u)].push_back(tie);
          tie.clear();
        }
        tie.push_back(v);
      }
      if (!tie.empty()) groups[static_cast<std::size_t>(u)].push_back(tie);
    }
    return sr::make_profile(std::move(groups));
  }
}

}  // namespace srtest

#endif
