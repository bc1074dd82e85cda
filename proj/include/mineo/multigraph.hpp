#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mineo/error.hpp"

namespace mineo {

using vertex_id = std::uint32_t;
using edge_id = std::uint32_t;

struct edge {
  vertex_id u;
  vertex_id v;

  friend bool operator==(const edge&, const edge&) = default;
};

// Undirected loopless multigraph. Edge identity is the position in the edge
// list, so parallel edges stay distinguishable.
class multigraph {
 public:
  multigraph() = default;

  multigraph(std::size_t vertex_count, std::vector<edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)), degrees_(vertex_count, 0) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [u, v] = edges_[e];
      if (u >= vertex_count_ || v >= vertex_count_) {
        throw validation_error("edge " + std::to_string(e) + " (" + std::to_string(u) + "," +
                               std::to_string(v) + "): endpoint out of range [0," +
                               std::to_string(vertex_count_) + ")");
      }
      if (u == v) {
        throw validation_error("edge " + std::to_string(e) + " (" + std::to_string(u) + "," +
                               std::to_string(v) + "): loop not allowed");
      }
      ++degrees_[u];
      ++degrees_[v];
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const edge& edge_at(edge_id e) const { return edges_[e]; }
  std::span<const edge> edges() const noexcept { return edges_; }

  std::size_t degree(vertex_id v) const { return degrees_[v]; }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }

  // Endpoint of e that is not `from`.
  vertex_id opposite(edge_id e, vertex_id from) const {
    const auto& [u, v] = edges_[e];
    return from == u ? v : u;
  }

  // Edge ids incident to each vertex, in increasing edge order.
  std::vector<std::vector<edge_id>> incidence() const {
    std::vector<std::vector<edge_id>> inc(vertex_count_);
    for (std::size_t v = 0; v < vertex_count_; ++v) inc[v].reserve(degrees_[v]);
    for (edge_id e = 0; e < edges_.size(); ++e) {
      inc[edges_[e].u].push_back(e);
      inc[edges_[e].v].push_back(e);
    }
    return inc;
  }

  friend bool operator==(const multigraph& a, const multigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<edge> edges_;
  std::vector<std::size_t> degrees_;
};

inline multigraph build_multigraph(std::size_t n, std::span<const std::pair<vertex_id, vertex_id>> edge_list) {
  std::vector<edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [u, v] : edge_list) edges.push_back({u, v});
  return multigraph(n, std::move(edges));
}

inline multigraph build_multigraph(std::size_t n, std::initializer_list<std::pair<vertex_id, vertex_id>> edge_list) {
  return build_multigraph(n, std::span<const std::pair<vertex_id, vertex_id>>(edge_list.begin(), edge_list.size()));
}

// Disjoint union; vertices of b are shifted by a.vertex_count(), edges of b
// follow those of a.
inline multigraph disjoint_union(const multigraph& a, const multigraph& b) {
  std::vector<edge> edges(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<vertex_id>(a.vertex_count());
  for (const auto& [u, v] : b.edges()) edges.push_back({u + shift, v + shift});
  return multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

// Per-edge head assignment. Only the vertex count and heads are kept; the
// graph is needed for validation at construction.
class orientation {
 public:
  orientation() = default;

  orientation(const multigraph& g, std::vector<vertex_id> heads)
      : vertex_count_(g.vertex_count()), heads_(std::move(heads)), in_degree_(g.vertex_count(), 0) {
    if (heads_.size() != g.edge_count()) {
      throw validation_error("orientation has " + std::to_string(heads_.size()) + " heads, graph has " +
                             std::to_string(g.edge_count()) + " edges");
    }
    for (edge_id e = 0; e < heads_.size(); ++e) {
      const auto& [u, v] = g.edge_at(e);
      if (heads_[e] != u && heads_[e] != v) {
        throw validation_error("edge " + std::to_string(e) + ": head " + std::to_string(heads_[e]) +
                               " not an endpoint");
      }
      ++in_degree_[heads_[e]];
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return heads_.size(); }

  vertex_id head(edge_id e) const { return heads_[e]; }
  std::span<const vertex_id> heads() const noexcept { return heads_; }
  std::span<const std::size_t> in_degrees() const noexcept { return in_degree_; }
  std::size_t in_degree(vertex_id v) const { return in_degree_[v]; }

  // p_v = in-degree / m.
  std::vector<double> distribution() const {
    std::vector<double> p(vertex_count_, 0.0);
    const auto m = static_cast<double>(heads_.size());
    for (std::size_t v = 0; v < vertex_count_; ++v) p[v] = static_cast<double>(in_degree_[v]) / m;
    return p;
  }

  friend bool operator==(const orientation& a, const orientation& b) {
    return a.vertex_count_ == b.vertex_count_ && a.heads_ == b.heads_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<vertex_id> heads_;
  std::vector<std::size_t> in_degree_;
};

// Non-increasing sequence of non-negative integers.
class degree_sequence {
 public:
  degree_sequence() = default;

  degree_sequence(std::vector<std::size_t> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
    total_ = std::accumulate(values_.begin(), values_.end(), std::size_t{0});
  }

  degree_sequence(std::initializer_list<std::size_t> values)
      : degree_sequence(std::vector<std::size_t>(values)) {}

  std::span<const std::size_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t total() const noexcept { return total_; }
  std::size_t operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const degree_sequence&, const degree_sequence&) = default;

 private:
  std::vector<std::size_t> values_;
  std::size_t total_ = 0;
};

// in-seq(X): in-degrees of the vertices of `subset` (default: all), sorted
// non-increasing.
inline degree_sequence in_degree_sequence(const orientation& o,
                                          std::optional<std::span<const vertex_id>> subset = std::nullopt) {
  if (!subset) {
    return degree_sequence(std::vector<std::size_t>(o.in_degrees().begin(), o.in_degrees().end()));
  }
  std::vector<std::size_t> values;
  values.reserve(subset->size());
  for (const auto v : *subset) {
    if (v >= o.vertex_count()) throw validation_error("subset vertex " + std::to_string(v) + " out of range");
    values.push_back(o.in_degree(v));
  }
  return degree_sequence(std::move(values));
}

// Exact non-negative rational in lowest terms.
struct fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  fraction() = default;
  fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw validation_error("zero denominator");
    const auto g = std::gcd(num, den);
    if (g != 0) {
      num /= g;
      den /= g;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const fraction&, const fraction&) = default;
  friend auto operator<=>(const fraction& a, const fraction& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
  friend fraction operator+(const fraction& a, const fraction& b) {
    return fraction(a.num * b.den + b.num * a.den, a.den * b.den);
  }
};

// Non-negative weights summing to one (within 1e-12).
class distribution {
 public:
  static constexpr double sum_tolerance = 1e-12;

  distribution() = default;

  explicit distribution(std::vector<double> weights) : weights_(std::move(weights)) {
    double sum = 0.0;
    for (const auto w : weights_) {
      if (!(w >= 0.0) || !std::isfinite(w)) throw validation_error("distribution weight must be finite and >= 0");
      sum += w;
    }
    if (std::abs(sum - 1.0) > sum_tolerance) {
      throw validation_error("distribution weights sum to " + std::to_string(sum) + ", expected 1");
    }
  }

  static distribution from_counts(std::span<const std::size_t> counts) {
    const auto total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    if (total == 0) throw validation_error("distribution from all-zero counts");
    std::vector<double> w(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) w[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    return distribution(std::move(w));
  }

  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

// d_v = deg(v) / 2m.
inline distribution degree_distribution(const multigraph& g) {
  if (g.edge_count() == 0) throw validation_error("degree distribution needs at least one edge");
  return distribution::from_counts(g.degrees());
}

}  // namespace mineo
