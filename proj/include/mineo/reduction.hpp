#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mineo/entropy.hpp"
#include "mineo/multigraph.hpp"

namespace mineo {

// Set system with q elements and q three-element sets, every element in
// exactly three sets, q a multiple of 3.
class exact_cover_instance {
 public:
  using triple = std::array<std::uint32_t, 3>;

  exact_cover_instance(std::size_t q, std::vector<triple> sets) : q_(q), sets_(std::move(sets)) {
    if (q_ == 0 || q_ % 3 != 0) throw validation_error("q must be a positive multiple of 3");
    if (sets_.size() != q_) {
      throw validation_error("expected " + std::to_string(q_) + " sets, got " + std::to_string(sets_.size()));
    }
    std::vector<std::size_t> occurrences(q_, 0);
    for (std::size_t i = 0; i < q_; ++i) {
      const auto& s = sets_[i];
      for (const auto x : s) {
        if (x >= q_) throw validation_error("set " + std::to_string(i) + ": element " + std::to_string(x) + " out of range");
        ++occurrences[x];
      }
      if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
        throw validation_error("set " + std::to_string(i) + " does not have three distinct elements");
      }
    }
    for (std::size_t x = 0; x < q_; ++x) {
      if (occurrences[x] != 3) {
        throw validation_error("element " + std::to_string(x) + " appears in " + std::to_string(occurrences[x]) +
                               " sets, expected 3");
      }
    }
  }

  std::size_t q() const noexcept { return q_; }
  const std::vector<triple>& sets() const noexcept { return sets_; }

  // The three set ids containing element x, increasing.
  std::array<std::uint32_t, 3> sets_containing(std::uint32_t x) const {
    std::array<std::uint32_t, 3> out{};
    std::size_t k = 0;
    for (std::uint32_t i = 0; i < q_; ++i) {
      for (const auto y : sets_[i]) {
        if (y == x) out[k++] = i;
      }
    }
    return out;
  }

 private:
  std::size_t q_;
  std::vector<triple> sets_;
};

// Element gadget: vertices 0..2 are the attachment points u1..u3, 3..5 are
// v1..v3. Triangular prism: triangles u1u2u3 and v1v2v3 plus the matching
// u_k v_k. Accepted only because verify_claim1_table passes on it.
inline multigraph gadget() {
  return multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

inline constexpr std::size_t gadget_vertex_count = 6;
inline constexpr std::size_t gadget_edge_count = 9;

// Optimal in-degree sequence of a gadget as a function of the number of arcs
// leaving it.
inline degree_sequence claim1_expected_inseq(int delta) {
  switch (delta) {
    case 0: return {4, 3, 3, 1, 1, 0};
    case 1: return {4, 3, 3, 1, 0, 0};
    case 2: return {4, 3, 2, 1, 0, 0};
    case 3: return {3, 3, 2, 1, 0, 0};
    default: throw validation_error("delta must be in 0..3");
  }
}

namespace detail {

// In-degrees of the six gadget vertices for one boundary pattern (bit k set:
// u_k's external arc leaves the gadget) and one internal orientation pattern
// (bit e set: edge e points to its second endpoint).
inline std::array<std::size_t, 6> gadget_in_degrees(const multigraph& g, unsigned boundary, std::uint64_t internal) {
  std::array<std::size_t, 6> in{};
  for (std::size_t k = 0; k < 3; ++k) in[k] += (boundary >> k & 1U) ? 0 : 1;
  for (edge_id e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edge_at(e);
    ++in[(internal >> e & 1U) ? v : u];
  }
  return in;
}

inline void require_gadget_shape(const multigraph& g) {
  if (g.vertex_count() != gadget_vertex_count) throw validation_error("gadget must have 6 vertices");
  if (g.edge_count() > 20) throw validation_error("gadget has too many edges for exhaustive check");
}

}  // namespace detail

struct claim1_pattern_result {
  unsigned boundary = 0;  // bit k: arc at u_k leaves the gadget
  int delta = 0;
  degree_sequence best;  // entropy-minimal achievable in-seq
  std::size_t distinct_sequences = 0;
  bool matches = false;  // best equals the table row and dominates the rest
};

// Exhaustive check of the gadget table: for each of the 8 boundary patterns,
// enumerate every internal orientation and compare the achievable in-degree
// sequences of the six gadget vertices against claim1_expected_inseq.
inline std::vector<claim1_pattern_result> check_claim1_table(const multigraph& g) {
  detail::require_gadget_shape(g);
  std::vector<claim1_pattern_result> results;
  const std::uint64_t internal_count = std::uint64_t{1} << g.edge_count();
  for (unsigned boundary = 0; boundary < 8; ++boundary) {
    claim1_pattern_result r;
    r.boundary = boundary;
    r.delta = std::popcount(boundary);
    std::set<std::vector<std::size_t>> seen;
    for (std::uint64_t internal = 0; internal < internal_count; ++internal) {
      const auto in = detail::gadget_in_degrees(g, boundary, internal);
      degree_sequence s(std::vector<std::size_t>(in.begin(), in.end()));
      seen.emplace(s.values().begin(), s.values().end());
    }
    r.distinct_sequences = seen.size();
    double best_h = 0.0;
    bool first = true;
    for (const auto& values : seen) {
      degree_sequence s(values);
      const double h = entropy_bits(s);
      if (first || h < best_h) {
        best_h = h;
        r.best = s;
        first = false;
      }
    }
    const auto expected = claim1_expected_inseq(r.delta);
    r.matches = r.best == expected;
    if (r.matches) {
      for (const auto& values : seen) {
        degree_sequence s(values);
        if (s == expected) continue;
        if (s.total() != expected.total() || !dominates(expected, s)) {
          r.matches = false;
          break;
        }
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

inline bool verify_claim1_table(const multigraph& g) {
  for (const auto& r : check_claim1_table(g)) {
    if (!r.matches) return false;
  }
  return true;
}

// Lowest internal pattern of the gadget realizing the table row for the
// given boundary pattern.
inline std::optional<std::uint64_t> gadget_realizing_pattern(const multigraph& g, unsigned boundary) {
  detail::require_gadget_shape(g);
  const auto expected = claim1_expected_inseq(std::popcount(boundary));
  for (std::uint64_t internal = 0; internal < (std::uint64_t{1} << g.edge_count()); ++internal) {
    const auto in = detail::gadget_in_degrees(g, boundary, internal);
    if (degree_sequence(std::vector<std::size_t>(in.begin(), in.end())) == expected) return internal;
  }
  return std::nullopt;
}

struct reduction_bundle {
  std::size_t q = 0;
  multigraph graph;
  std::vector<vertex_id> set_vertex;                  // s_i
  std::vector<std::array<vertex_id, 6>> gadget_vertices;  // X_j = u_{j,1..3}, v_{j,1..3}
  std::vector<std::array<edge_id, 9>> internal_edges;     // gadget edges of X_j
  std::vector<std::array<edge_id, 3>> boundary_edges;     // u_{j,k} -- s_{j_k}
  std::vector<std::array<std::uint32_t, 3>> boundary_sets;  // j_1, j_2, j_3
  double target_entropy = 0.0;
};

// (1/m)(4q log2(m/4) + 7q log2(m/3) + q log2 m) with m = 12q: the entropy an
// optimal orientation reaches exactly when an exact cover exists.
inline double reduction_target_entropy(std::size_t q) {
  const auto qd = static_cast<double>(q);
  const double m = 12.0 * qd;
  return (4.0 * qd * std::log2(m / 4.0) + 7.0 * qd * std::log2(m / 3.0) + qd * std::log2(m)) / m;
}

// One gadget per element, one vertex per set; u_{j,k} is linked to the k-th
// set containing element j. Vertex ids: gadget j occupies 6j..6j+5, set i is
// 6q+i. Edges: per element, its 9 gadget edges then its 3 boundary edges.
inline reduction_bundle gen_reduction(const exact_cover_instance& xc) {
  static const bool gadget_ok = verify_claim1_table(gadget());
  if (!gadget_ok) throw std::logic_error("element gadget fails the exhaustive table check");

  const auto q = xc.q();
  const auto g0 = gadget();
  reduction_bundle b;
  b.q = q;
  const auto set_base = static_cast<vertex_id>(6 * q);
  for (std::size_t i = 0; i < q; ++i) b.set_vertex.push_back(set_base + static_cast<vertex_id>(i));

  std::vector<edge> edges;
  edges.reserve(12 * q);
  for (std::uint32_t j = 0; j < q; ++j) {
    const auto base = static_cast<vertex_id>(6 * j);
    std::array<vertex_id, 6> xs{};
    for (vertex_id k = 0; k < 6; ++k) xs[k] = base + k;
    b.gadget_vertices.push_back(xs);

    std::array<edge_id, 9> internal{};
    for (edge_id e = 0; e < gadget_edge_count; ++e) {
      internal[e] = static_cast<edge_id>(edges.size());
      edges.push_back({base + g0.edge_at(e).u, base + g0.edge_at(e).v});
    }
    b.internal_edges.push_back(internal);

    const auto sets = xc.sets_containing(j);
    b.boundary_sets.push_back(sets);
    std::array<edge_id, 3> boundary{};
    for (std::size_t k = 0; k < 3; ++k) {
      boundary[k] = static_cast<edge_id>(edges.size());
      edges.push_back({base + static_cast<vertex_id>(k), b.set_vertex[sets[k]]});
    }
    b.boundary_edges.push_back(boundary);
  }
  b.graph = multigraph(7 * q, std::move(edges));
  b.target_entropy = reduction_target_entropy(q);
  return b;
}

// Orientation witnessing the target entropy from an exact cover: the arc at
// the covering set leaves X_j, the other two boundary arcs enter it, and the
// gadget interior realizes (4,3,3,1,0,0).
inline orientation certificate_orientation(const reduction_bundle& b, std::span<const std::uint32_t> cover) {
  const auto q = b.q;
  std::vector<char> chosen(q, 0);
  for (const auto i : cover) {
    if (i >= q) throw validation_error("cover set " + std::to_string(i) + " out of range");
    if (chosen[i]) throw validation_error("cover lists set " + std::to_string(i) + " twice");
    chosen[i] = 1;
  }

  const auto g0 = gadget();
  std::array<std::uint64_t, 3> interior{};
  for (unsigned k = 0; k < 3; ++k) {
    const auto p = gadget_realizing_pattern(g0, 1U << k);
    if (!p) throw std::logic_error("gadget cannot realize the single-outgoing-arc row");
    interior[k] = *p;
  }

  std::vector<vertex_id> heads(b.graph.edge_count());
  for (std::size_t j = 0; j < q; ++j) {
    int covering = -1;
    int hits = 0;
    for (int k = 0; k < 3; ++k) {
      if (chosen[b.boundary_sets[j][k]]) {
        covering = k;
        ++hits;
      }
    }
    if (hits != 1) {
      throw validation_error("cover is not exact: element " + std::to_string(j) + " covered " +
                             std::to_string(hits) + " times");
    }
    for (std::size_t k = 0; k < 3; ++k) {
      const auto e = b.boundary_edges[j][k];
      const auto& [u, s] = b.graph.edge_at(e);
      heads[e] = static_cast<int>(k) == covering ? s : u;
    }
    for (edge_id e = 0; e < gadget_edge_count; ++e) {
      const auto ge = b.internal_edges[j][e];
      const auto& [u, v] = b.graph.edge_at(ge);
      heads[ge] = (interior[covering] >> e & 1U) ? v : u;
    }
  }
  return orientation(b.graph, std::move(heads));
}

}  // namespace mineo
