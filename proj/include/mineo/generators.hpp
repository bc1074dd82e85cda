#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "mineo/multigraph.hpp"

namespace mineo {

// Cycle on n vertices, edge i = (i, i+1 mod n).
inline multigraph gen_cycle(std::size_t n) {
  if (n < 3) throw validation_error("cycle needs n >= 3");
  std::vector<edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<vertex_id>(i), static_cast<vertex_id>((i + 1) % n)});
  }
  return multigraph(n, std::move(edges));
}

// Family on which the greedy algorithm can lose close to log2 e bits.
struct tight_example_bundle {
  std::size_t t = 0;
  multigraph graph;
  std::vector<vertex_id> s_vertices;
  // level_vertices[i - 1] holds the t!/i vertices of degree i.
  std::vector<std::vector<vertex_id>> level_vertices;
  orientation optimal_orientation;     // every edge into S
  orientation bad_greedy_orientation;  // every edge out of S
};

inline constexpr std::size_t max_tight_t = 8;

inline std::size_t factorial(std::size_t t) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= t; ++i) f *= i;
  return f;
}

// S has t! independent vertices; for each i in 1..t there are t!/i vertices
// of degree i whose neighbourhoods are consecutive blocks of S of size i.
// Level vertices are numbered before S (level 1 first), so lowest-id-first
// greedy always prefers a level vertex over an S vertex of equal degree.
inline tight_example_bundle gen_tight_greedy(std::size_t t) {
  if (t < 2) throw validation_error("tight example needs t >= 2");
  if (t > max_tight_t) throw limit_error("tight example limited to t <= 8");
  const auto tf = factorial(t);

  tight_example_bundle b;
  b.t = t;
  vertex_id next = 0;
  b.level_vertices.resize(t);
  for (std::size_t i = 1; i <= t; ++i) {
    for (std::size_t k = 0; k < tf / i; ++k) b.level_vertices[i - 1].push_back(next++);
  }
  for (std::size_t k = 0; k < tf; ++k) b.s_vertices.push_back(next++);

  std::vector<edge> edges;
  edges.reserve(t * tf);
  for (std::size_t i = 1; i <= t; ++i) {
    const auto& level = b.level_vertices[i - 1];
    for (std::size_t k = 0; k < level.size(); ++k) {
      for (std::size_t j = 0; j < i; ++j) edges.push_back({level[k], b.s_vertices[k * i + j]});
    }
  }
  b.graph = multigraph(next, std::move(edges));

  std::vector<vertex_id> into_s(b.graph.edge_count());
  std::vector<vertex_id> out_of_s(b.graph.edge_count());
  for (edge_id e = 0; e < b.graph.edge_count(); ++e) {
    out_of_s[e] = b.graph.edge_at(e).u;
    into_s[e] = b.graph.edge_at(e).v;
  }
  b.optimal_orientation = orientation(b.graph, std::move(into_s));
  b.bad_greedy_orientation = orientation(b.graph, std::move(out_of_s));
  return b;
}

// m edges drawn uniformly, with replacement, among unordered pairs of
// distinct vertices. Stored as (min, max).
inline multigraph gen_random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2) throw validation_error("random multigraph needs n >= 2");
  if (m < 1) throw validation_error("random multigraph needs m >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<vertex_id> pick(0, static_cast<vertex_id>(n - 1));
  std::vector<edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    if (a == b) continue;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return multigraph(n, std::move(edges));
}

}  // namespace mineo
