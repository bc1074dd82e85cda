#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "mineo/multigraph.hpp"

namespace mineo {

// Polymatroid greedy over the base polytope of e, as integer masses: each
// vertex in turn receives the edges incident to it and to no earlier vertex.
inline std::vector<std::size_t> polymatroid_greedy_counts(const multigraph& g, std::span<const vertex_id> vertex_order) {
  const auto n = g.vertex_count();
  if (vertex_order.size() != n) throw validation_error("vertex order is not a permutation");
  std::vector<std::size_t> rank(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = vertex_order[i];
    if (v >= n || rank[v] != n) throw validation_error("vertex order is not a permutation");
    rank[v] = i;
  }
  std::vector<std::size_t> counts(n, 0);
  for (const auto& [u, v] : g.edges()) ++counts[rank[u] < rank[v] ? u : v];
  return counts;
}

inline distribution polymatroid_greedy(const multigraph& g, std::span<const vertex_id> vertex_order) {
  if (g.edge_count() == 0) throw validation_error("graph has no edges");
  return distribution::from_counts(polymatroid_greedy_counts(g, vertex_order));
}

// Vertices by non-increasing degree, ties by id; isolated vertices last.
inline std::vector<vertex_id> cost_order(const multigraph& g) {
  std::vector<vertex_id> order(g.vertex_count());
  std::iota(order.begin(), order.end(), vertex_id{0});
  std::stable_sort(order.begin(), order.end(), [&](vertex_id a, vertex_id b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Optimum of min sum_v -p_v log2(deg(v)/m) over the base polytope, solved by
// the polymatroid greedy in cost order. A lower bound on the minimum entropy.
inline double lp_lower_bound(const multigraph& g) {
  const auto m = g.edge_count();
  if (m == 0) throw validation_error("graph has no edges");
  const auto order = cost_order(g);
  const auto counts = polymatroid_greedy_counts(g, order);
  const auto total = static_cast<double>(m);
  double value = 0.0;
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (counts[v] == 0) continue;
    // Isolated vertices have infinite cost but never receive mass.
    value += static_cast<double>(counts[v]) / total * std::log2(total / static_cast<double>(g.degree(v)));
  }
  return value;
}

}  // namespace mineo
