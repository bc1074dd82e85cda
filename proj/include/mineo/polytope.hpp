#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mineo/multigraph.hpp"

namespace mineo {

inline constexpr std::size_t max_polytope_vertices = 24;
inline constexpr double polytope_tolerance = 1e-9;

// e(S): fraction of edges with at least one endpoint in S.
inline fraction edge_coverage_fraction(const multigraph& g, std::span<const vertex_id> s) {
  if (g.edge_count() == 0) throw validation_error("edge coverage undefined for a graph without edges");
  std::vector<char> in_s(g.vertex_count(), 0);
  for (const auto v : s) {
    if (v >= g.vertex_count()) throw validation_error("vertex " + std::to_string(v) + " out of range");
    in_s[v] = 1;
  }
  std::int64_t covered = 0;
  for (const auto& [u, v] : g.edges()) covered += (in_s[u] || in_s[v]) ? 1 : 0;
  return fraction(covered, static_cast<std::int64_t>(g.edge_count()));
}

// Exhaustive membership test for the base polytope of e: p(V) = 1 and
// p(S) <= e(S) for every S. Test oracle only, 2^n subsets.
inline bool in_base_polytope(const multigraph& g, std::span<const double> p) {
  const auto n = g.vertex_count();
  if (n > max_polytope_vertices) throw limit_error("exhaustive membership limited to small n");
  if (p.size() != n) throw validation_error("point has wrong dimension");
  if (g.edge_count() == 0) throw validation_error("base polytope undefined for a graph without edges");

  double total = 0.0;
  for (const auto x : p) total += x;
  if (std::abs(total - 1.0) > polytope_tolerance) return false;

  std::vector<std::uint32_t> edge_masks;
  edge_masks.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edge_masks.push_back((std::uint32_t{1} << u) | (std::uint32_t{1} << v));

  const auto m = static_cast<double>(g.edge_count());
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    double mass = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) mass += p[v];
    }
    std::size_t covered = 0;
    for (const auto em : edge_masks) covered += (em & mask) != 0;
    if (mass > static_cast<double>(covered) / m + polytope_tolerance) return false;
  }
  return true;
}

inline bool in_base_polytope(const multigraph& g, const distribution& p) {
  return in_base_polytope(g, p.weights());
}

}  // namespace mineo
