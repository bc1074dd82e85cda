#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mineo/entropy.hpp"
#include "mineo/orient.hpp"

namespace mineo {

inline constexpr std::size_t max_bruteforce_edges = 24;

// Pattern bit e set means edge e points to its second listed endpoint.
inline orientation orientation_from_pattern(const multigraph& g, std::uint64_t pattern) {
  std::vector<vertex_id> heads(g.edge_count());
  for (edge_id e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edge_at(e);
    heads[e] = (pattern >> e & 1U) ? v : u;
  }
  return orientation(g, std::move(heads));
}

// Enumerates all 2^m orientations. Among minimum-entropy orientations the one
// with the smallest pattern (see orientation_from_pattern) is returned.
inline solve_result solve_exact_bruteforce(const multigraph& g) {
  const auto m = g.edge_count();
  if (m > max_bruteforce_edges) throw limit_error("instance too large for exhaustive solver");
  detail::require_edges(g);

  const auto f = detail::xlogx_table(m);
  const auto edges = g.edges();
  // Gray-code walk over the low bits, fresh recomputation per chunk of high
  // bits so rounding drift stays bounded.
  const std::size_t low_bits = std::min<std::size_t>(m, 12);
  const std::uint64_t chunks = std::uint64_t{1} << (m - low_bits);
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  constexpr double tie_eps = 1e-9;

  double best_score = -1.0;
  std::uint64_t best_pattern = 0;
  std::vector<std::size_t> in(g.vertex_count());
  std::vector<vertex_id> heads(m);

  for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
    const std::uint64_t base = chunk << low_bits;
    std::fill(in.begin(), in.end(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      heads[e] = (base >> e & 1U) ? edges[e].v : edges[e].u;
      ++in[heads[e]];
    }
    double score = 0.0;
    for (const auto c : in) score += f[c];

    for (std::uint64_t i = 0;; ++i) {
      const std::uint64_t pattern = base | (i ^ (i >> 1));
      if (score > best_score + tie_eps || (score >= best_score - tie_eps && pattern < best_pattern)) {
        best_score = score;
        best_pattern = pattern;
      }
      if (i + 1 == steps) break;
      const auto e = static_cast<std::size_t>(std::countr_zero(i + 1));
      const auto h = heads[e];
      const auto t = h == edges[e].u ? edges[e].v : edges[e].u;
      score += f[in[t] + 1] - f[in[t]] + f[in[h] - 1] - f[in[h]];
      --in[h];
      ++in[t];
      heads[e] = t;
    }
  }

  auto r = make_result(orientation_from_pattern(g, best_pattern), "exact");
  r.nodes_explored = chunks * steps;
  r.optimal = optimality::yes;
  return r;
}

namespace detail {

// Admissible bound for the branch and bound: with cap(v) = current in-degree
// plus undecided incident edges, every completion has
//   H >= log2 m - (1/m) [ sum_v in(v) log2 cap(v) + sum_free log2 max cap ].
// At the root cap = deg, which is the degree bound from the +1 bit analysis.
struct bnb_state {
  const multigraph& g;
  std::vector<edge_id> order;
  std::vector<std::size_t> in;
  std::vector<std::size_t> free;
  std::vector<double> log2_table;
  double log2_m;
  double m;

  explicit bnb_state(const multigraph& graph)
      : g(graph),
        order(graph.edge_count()),
        in(graph.vertex_count(), 0),
        free(graph.degrees().begin(), graph.degrees().end()),
        log2_table(graph.edge_count() + 1, 0.0),
        log2_m(std::log2(static_cast<double>(graph.edge_count()))),
        m(static_cast<double>(graph.edge_count())) {
    for (std::size_t c = 1; c < log2_table.size(); ++c) log2_table[c] = std::log2(static_cast<double>(c));
    std::iota(order.begin(), order.end(), edge_id{0});
    const auto key = [&](edge_id e) {
      const auto& [u, v] = g.edge_at(e);
      return std::max(g.degree(u), g.degree(v));
    };
    std::stable_sort(order.begin(), order.end(), [&](edge_id a, edge_id b) { return key(a) > key(b); });
  }

  std::size_t cap(vertex_id v) const { return in[v] + free[v]; }

  double bound(std::size_t depth) const {
    double mass = 0.0;
    for (vertex_id v = 0; v < in.size(); ++v) {
      if (in[v] > 0) mass += static_cast<double>(in[v]) * log2_table[cap(v)];
    }
    for (std::size_t i = depth; i < order.size(); ++i) {
      const auto& [u, v] = g.edge_at(order[i]);
      mass += log2_table[std::max(cap(u), cap(v))];
    }
    return log2_m - mass / m;
  }

  void apply(edge_id e, vertex_id head) {
    const auto& [u, v] = g.edge_at(e);
    --free[u];
    --free[v];
    ++in[head];
  }

  void undo(edge_id e, vertex_id head) {
    const auto& [u, v] = g.edge_at(e);
    ++free[u];
    ++free[v];
    --in[head];
  }
};

}  // namespace detail

// Depth-first branch and bound over edge directions, edges taken by
// decreasing max endpoint degree. The incumbent starts from local search on
// a biased orientation. On timeout the incumbent is returned with
// optimal = no.
inline solve_result solve_exact_bnb(const multigraph& g, std::chrono::duration<double> time_limit) {
  detail::require_edges(g);
  const auto started = std::chrono::steady_clock::now();
  const auto deadline = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(time_limit);

  const auto seed = improve_by_flips(g, orient_biased(g).orient);
  std::vector<vertex_id> best(seed.orient.heads().begin(), seed.orient.heads().end());
  double incumbent = seed.entropy;

  detail::bnb_state st(g);
  const auto m = g.edge_count();
  const double root_bound = st.bound(0);

  std::vector<vertex_id> heads(m);
  std::vector<std::uint8_t> tried(m + 1, 0);
  std::uint64_t nodes = 0;
  bool timed_out = false;
  std::size_t depth = 0;
  bool entering = true;

  while (true) {
    if (entering) {
      ++nodes;
      if ((nodes & 1023U) == 0 && std::chrono::steady_clock::now() > deadline) {
        timed_out = true;
        break;
      }
      const double b = st.bound(depth);
      if (b >= incumbent - strict_tolerance) {
        entering = false;
      } else if (depth == m) {
        // cap == in everywhere, so the bound is the exact entropy.
        incumbent = b;
        for (edge_id e = 0; e < m; ++e) best[e] = heads[e];
        entering = false;
      } else {
        tried[depth] = 0;
      }
      if (!entering) {
        if (depth == 0) break;
        --depth;
        st.undo(st.order[depth], heads[st.order[depth]]);
        continue;
      }
    }
    // Expand the next child of the node at `depth`, or backtrack.
    if (tried[depth] < 2) {
      const auto e = st.order[depth];
      const auto& [u, v] = g.edge_at(e);
      const vertex_id preferred = st.cap(u) >= st.cap(v) ? u : v;
      const vertex_id head = tried[depth] == 0 ? preferred : (preferred == u ? v : u);
      ++tried[depth];
      heads[e] = head;
      st.apply(e, head);
      ++depth;
      entering = true;
    } else {
      if (depth == 0) break;
      --depth;
      st.undo(st.order[depth], heads[st.order[depth]]);
      entering = false;
    }
  }

  auto r = make_result(orientation(g, std::move(best)), "bnb");
  r.nodes_explored = nodes;
  r.lower_bound_used = root_bound;
  r.optimal = timed_out ? optimality::no : optimality::yes;
  return r;
}

}  // namespace mineo
