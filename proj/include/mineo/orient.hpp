#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "mineo/entropy.hpp"
#include "mineo/multigraph.hpp"

namespace mineo {

// How a biased orientation resolves edges between equal-degree endpoints.
enum class biased_tie {
  toward_lower_id,
  toward_higher_id,
  by_edge_order,  // toward the second listed endpoint
};

// Which maximum-degree vertex the greedy algorithm takes first.
enum class greedy_tie {
  lowest_id_first,
  highest_id_first,
};

inline constexpr biased_tie all_biased_ties[] = {biased_tie::toward_lower_id, biased_tie::toward_higher_id,
                                                 biased_tie::by_edge_order};
inline constexpr greedy_tie all_greedy_ties[] = {greedy_tie::lowest_id_first, greedy_tie::highest_id_first};

inline std::string_view to_string(biased_tie t) {
  switch (t) {
    case biased_tie::toward_lower_id: return "toward-lower-id";
    case biased_tie::toward_higher_id: return "toward-higher-id";
    case biased_tie::by_edge_order: return "by-edge-order";
  }
  return "?";
}

inline std::string_view to_string(greedy_tie t) {
  switch (t) {
    case greedy_tie::lowest_id_first: return "lowest-id-first";
    case greedy_tie::highest_id_first: return "highest-id-first";
  }
  return "?";
}

enum class optimality { yes, no, unknown };

inline std::string_view to_string(optimality o) {
  switch (o) {
    case optimality::yes: return "true";
    case optimality::no: return "false";
    case optimality::unknown: return "unknown";
  }
  return "?";
}

struct solve_result {
  orientation orient;
  double entropy = 0.0;
  std::string method;
  // Search nodes for exact solvers, reversals for local search.
  std::uint64_t nodes_explored = 0;
  std::optional<double> lower_bound_used;
  optimality optimal = optimality::unknown;
};

inline solve_result make_result(orientation o, std::string method) {
  solve_result r;
  r.entropy = entropy_bits(o);
  r.orient = std::move(o);
  r.method = std::move(method);
  return r;
}

namespace detail {

inline void require_edges(const multigraph& g) {
  if (g.edge_count() == 0) throw validation_error("graph has no edges");
}

}  // namespace detail

// Every edge whose endpoints differ in degree points to the larger one.
inline bool is_biased(const multigraph& g, const orientation& o) {
  for (edge_id e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edge_at(e);
    const auto du = g.degree(u);
    const auto dv = g.degree(v);
    if (du > dv && o.head(e) != u) return false;
    if (dv > du && o.head(e) != v) return false;
  }
  return true;
}

// Linear-time biased orientation. Entropy is at most OPT + 1.
inline solve_result orient_biased(const multigraph& g, biased_tie tie = biased_tie::toward_lower_id) {
  detail::require_edges(g);
  std::vector<vertex_id> heads(g.edge_count());
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    const auto du = g.degree(u);
    const auto dv = g.degree(v);
    if (du != dv) {
      heads[e] = du > dv ? u : v;
      continue;
    }
    switch (tie) {
      case biased_tie::toward_lower_id: heads[e] = std::min(u, v); break;
      case biased_tie::toward_higher_id: heads[e] = std::max(u, v); break;
      case biased_tie::by_edge_order: heads[e] = v; break;
    }
  }
  auto r = make_result(orientation(g, std::move(heads)), "biased");
  return r;
}

// Repeatedly take a vertex of maximum residual degree, point all its
// remaining edges at it and delete it.
inline solve_result orient_greedy(const multigraph& g, greedy_tie tie = greedy_tie::lowest_id_first) {
  detail::require_edges(g);
  const auto n = g.vertex_count();
  const auto inc = g.incidence();
  std::vector<std::size_t> residual(g.degrees().begin(), g.degrees().end());
  std::vector<char> removed(n, 0);
  std::vector<vertex_id> heads(g.edge_count());
  std::vector<char> oriented(g.edge_count(), 0);

  using entry = std::pair<std::size_t, vertex_id>;
  const auto cmp = [tie](const entry& a, const entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return tie == greedy_tie::lowest_id_first ? a.second > b.second : a.second < b.second;
  };
  std::priority_queue<entry, std::vector<entry>, decltype(cmp)> heap(cmp);
  for (vertex_id v = 0; v < n; ++v) {
    if (residual[v] > 0) heap.emplace(residual[v], v);
  }

  std::size_t remaining = g.edge_count();
  while (remaining > 0) {
    const auto [deg, v] = heap.top();
    heap.pop();
    if (removed[v] || deg != residual[v]) continue;
    removed[v] = 1;
    for (const auto e : inc[v]) {
      if (oriented[e]) continue;
      oriented[e] = 1;
      heads[e] = v;
      --remaining;
      const auto w = g.opposite(e, v);
      if (--residual[w] > 0) heap.emplace(residual[w], w);
    }
    residual[v] = 0;
  }
  return make_result(orientation(g, std::move(heads)), "greedy");
}

namespace detail {

// c * log2(c) for c = 0..m.
inline std::vector<double> xlogx_table(std::size_t m) {
  std::vector<double> t(m + 2, 0.0);
  for (std::size_t c = 2; c < t.size(); ++c) t[c] = static_cast<double>(c) * std::log2(static_cast<double>(c));
  return t;
}

}  // namespace detail

// Single-edge local search. A reversal is taken when it lowers the entropy by
// more than strict_tolerance, or when it only swaps two in-degree values and
// moves the arc toward the endpoint of larger degree. The second kind leaves
// the entropy unchanged and lets the search escape plateaus such as an
// outward-oriented star. Both kinds increase (sum of c log c, sum of
// in-degree * degree) lexicographically, so the search terminates.
inline solve_result improve_by_flips(const multigraph& g, const orientation& start) {
  std::vector<vertex_id> heads(start.heads().begin(), start.heads().end());
  std::vector<std::size_t> in(start.in_degrees().begin(), start.in_degrees().end());
  const auto m = g.edge_count();
  const auto f = detail::xlogx_table(m);
  const double threshold = strict_tolerance * static_cast<double>(m);

  std::uint64_t flips = 0;
  bool changed = m > 0;
  while (changed) {
    changed = false;
    for (edge_id e = 0; e < m; ++e) {
      const auto h = heads[e];
      const auto t = g.opposite(e, h);
      const double gain = f[in[t] + 1] - f[in[t]] + f[in[h] - 1] - f[in[h]];
      const bool improving = gain > threshold;
      const bool sideways = in[t] + 1 == in[h] && g.degree(t) > g.degree(h);
      if (!improving && !sideways) continue;
      heads[e] = t;
      --in[h];
      ++in[t];
      ++flips;
      changed = true;
    }
  }
  auto r = make_result(orientation(g, std::move(heads)), "flips");
  r.nodes_explored = flips;
  return r;
}

}  // namespace mineo
