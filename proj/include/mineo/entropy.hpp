#pragma once

#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>

#include "mineo/multigraph.hpp"

namespace mineo {

// Tolerance for "strictly better" comparisons between entropies.
inline constexpr double strict_tolerance = 1e-12;
// Tolerance for asserting approximation guarantees and closed forms.
inline constexpr double guarantee_tolerance = 1e-9;

inline const double log2_e = std::log2(std::exp(1.0));

// Shannon entropy in bits of the distribution counts / m, with 0 log 0 = 0.
inline double entropy_bits(std::span<const std::size_t> counts, std::size_t m) {
  if (m == 0) throw validation_error("entropy needs a positive total");
  const auto sum = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (sum != m) {
    throw validation_error("counts sum to " + std::to_string(sum) + ", expected " + std::to_string(m));
  }
  const auto total = static_cast<double>(m);
  double h = 0.0;
  for (const auto c : counts) {
    if (c == 0) continue;
    const auto x = static_cast<double>(c);
    h += (x / total) * std::log2(total / x);
  }
  return h;
}

inline double entropy_bits(std::span<const std::size_t> counts) {
  return entropy_bits(counts, std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
}

inline double entropy_bits(const degree_sequence& s) { return entropy_bits(s.values(), s.total()); }

inline double entropy_bits(const orientation& o) { return entropy_bits(o.in_degrees(), o.edge_count()); }

// Binary entropy h(x) in bits.
inline double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Kullback-Leibler divergence D(p || q) in bits. Returns +infinity when some
// p_i > 0 has q_i = 0.
inline double relative_entropy(const distribution& p, const distribution& q) {
  if (p.size() != q.size()) throw validation_error("relative entropy over different domains");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    d += p[i] * std::log2(p[i] / q[i]);
  }
  // Rounding can leave a tiny negative value when p == q.
  return d < 0.0 && d > -strict_tolerance ? 0.0 : d;
}

// a dominates b: every prefix sum of a is >= the matching prefix sum of b,
// with at least one strict. The shorter sequence is padded with zeros.
inline bool dominates(const degree_sequence& a, const degree_sequence& b) {
  if (a.total() != b.total()) throw validation_error("dominance undefined for different masses");
  const auto len = std::max(a.size(), b.size());
  std::size_t pa = 0;
  std::size_t pb = 0;
  bool strict = false;
  for (std::size_t i = 0; i < len; ++i) {
    pa += i < a.size() ? a[i] : 0;
    pb += i < b.size() ? b[i] : 0;
    if (pa < pb) return false;
    if (pa > pb) strict = true;
  }
  return strict;
}

}  // namespace mineo
