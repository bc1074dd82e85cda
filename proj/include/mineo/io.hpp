#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mineo/multigraph.hpp"
#include "mineo/orient.hpp"
#include "mineo/reduction.hpp"

namespace mineo {

// Graph file:        p mineo <n> <m>, then m lines  e <u> <v>
// Orientation file:  o mineo <m>,     then m lines  a <edge> <head>
// Exact cover file:  q <q>,           then q lines  s <a> <b> <c>
// Ids are 0-based. Blank lines and lines starting with '#' are ignored.

namespace detail {

struct line_reader {
  std::istringstream in;
  std::size_t line_no = 0;

  explicit line_reader(std::string_view text) : in{std::string(text)} {}

  // Next non-comment line split on whitespace; nullopt at end of input.
  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      for (std::string tok; ls >> tok;) tokens.push_back(tok);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return tokens;
    }
    return std::nullopt;
  }
};

inline std::uint64_t parse_uint(std::size_t line, const std::string& tok) {
  std::uint64_t value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) throw parse_error(line, "expected non-negative integer, got '" + tok + "'");
  return value;
}

inline void expect_arity(std::size_t line, const std::vector<std::string>& tokens, std::size_t n) {
  if (tokens.size() != n) {
    throw parse_error(line, "'" + tokens.front() + "' line needs " + std::to_string(n - 1) + " fields");
  }
}

}  // namespace detail

inline multigraph parse_graph(std::string_view text) {
  detail::line_reader r(text);
  auto header = r.next();
  if (!header) throw parse_error(0, "missing 'p mineo <n> <m>' header");
  if (header->size() != 4 || (*header)[0] != "p" || (*header)[1] != "mineo") {
    throw parse_error(r.line_no, "malformed header, expected 'p mineo <n> <m>'");
  }
  const auto n = detail::parse_uint(r.line_no, (*header)[2]);
  const auto m = detail::parse_uint(r.line_no, (*header)[3]);
  if (n > UINT32_MAX) throw parse_error(r.line_no, "vertex count too large");

  std::vector<edge> edges;
  while (auto tokens = r.next()) {
    if ((*tokens)[0] != "e") throw parse_error(r.line_no, "unexpected line type '" + (*tokens)[0] + "'");
    detail::expect_arity(r.line_no, *tokens, 3);
    if (edges.size() == m) throw parse_error(r.line_no, "more edge lines than the declared " + std::to_string(m));
    const auto u = detail::parse_uint(r.line_no, (*tokens)[1]);
    const auto v = detail::parse_uint(r.line_no, (*tokens)[2]);
    if (u >= n || v >= n) throw parse_error(r.line_no, "endpoint out of range [0," + std::to_string(n) + ")");
    if (u == v) throw parse_error(r.line_no, "loop not allowed");
    edges.push_back({static_cast<vertex_id>(u), static_cast<vertex_id>(v)});
  }
  if (edges.size() != m) {
    throw parse_error(0, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return multigraph(n, std::move(edges));
}

inline std::string serialize_graph(const multigraph& g) {
  std::string out = "p mineo " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline orientation parse_orientation(std::string_view text, const multigraph& g) {
  detail::line_reader r(text);
  auto header = r.next();
  if (!header) throw parse_error(0, "missing 'o mineo <m>' header");
  if (header->size() != 3 || (*header)[0] != "o" || (*header)[1] != "mineo") {
    throw parse_error(r.line_no, "malformed header, expected 'o mineo <m>'");
  }
  const auto m = detail::parse_uint(r.line_no, (*header)[2]);
  if (m != g.edge_count()) {
    throw parse_error(r.line_no, "orientation declares " + std::to_string(m) + " edges, graph has " +
                                     std::to_string(g.edge_count()));
  }
  std::vector<vertex_id> heads(m);
  std::vector<char> seen(m, 0);
  std::size_t count = 0;
  while (auto tokens = r.next()) {
    if ((*tokens)[0] != "a") throw parse_error(r.line_no, "unexpected line type '" + (*tokens)[0] + "'");
    detail::expect_arity(r.line_no, *tokens, 3);
    const auto e = detail::parse_uint(r.line_no, (*tokens)[1]);
    const auto h = detail::parse_uint(r.line_no, (*tokens)[2]);
    if (e >= m) throw parse_error(r.line_no, "edge index out of range");
    if (seen[e]) throw parse_error(r.line_no, "duplicate edge index " + std::to_string(e));
    const auto& [u, v] = g.edge_at(static_cast<edge_id>(e));
    if (h != u && h != v) throw parse_error(r.line_no, "head not an endpoint of edge " + std::to_string(e));
    seen[e] = 1;
    heads[e] = static_cast<vertex_id>(h);
    ++count;
  }
  if (count != m) throw parse_error(0, "declared " + std::to_string(m) + " arcs, found " + std::to_string(count));
  return orientation(g, std::move(heads));
}

inline std::string serialize_orientation(const orientation& o) {
  std::string out = "o mineo " + std::to_string(o.edge_count()) + "\n";
  for (edge_id e = 0; e < o.edge_count(); ++e) {
    out += "a " + std::to_string(e) + " " + std::to_string(o.head(e)) + "\n";
  }
  return out;
}

inline exact_cover_instance parse_exact_cover(std::string_view text) {
  detail::line_reader r(text);
  auto header = r.next();
  if (!header) throw parse_error(0, "missing 'q <q>' header");
  if (header->size() != 2 || (*header)[0] != "q") throw parse_error(r.line_no, "malformed header, expected 'q <q>'");
  const auto q = detail::parse_uint(r.line_no, (*header)[1]);
  std::vector<exact_cover_instance::triple> sets;
  while (auto tokens = r.next()) {
    if ((*tokens)[0] != "s") throw parse_error(r.line_no, "unexpected line type '" + (*tokens)[0] + "'");
    detail::expect_arity(r.line_no, *tokens, 4);
    exact_cover_instance::triple t{};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto x = detail::parse_uint(r.line_no, (*tokens)[k + 1]);
      if (x >= q) throw parse_error(r.line_no, "element " + std::to_string(x) + " out of range");
      t[k] = static_cast<std::uint32_t>(x);
    }
    sets.push_back(t);
  }
  if (sets.size() != q) throw parse_error(0, "declared " + std::to_string(q) + " sets, found " + std::to_string(sets.size()));
  return exact_cover_instance(q, std::move(sets));
}

inline std::string serialize_exact_cover(const exact_cover_instance& xc) {
  std::string out = "q " + std::to_string(xc.q()) + "\n";
  for (const auto& s : xc.sets()) {
    out += "s " + std::to_string(s[0]) + " " + std::to_string(s[1]) + " " + std::to_string(s[2]) + "\n";
  }
  return out;
}

// key=value report, one pair per line.
struct report {
  std::string method;
  std::optional<double> entropy_bits;
  std::optional<double> opt_gap_bound;
  std::optional<double> lower_bound_bits;
  std::optional<double> elapsed_ms;
  std::optional<std::uint64_t> nodes_explored;
  optimality optimal = optimality::unknown;
};

inline std::string format_bits(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

inline std::string serialize_report(const report& r) {
  std::string out = "method=" + r.method + "\n";
  if (r.entropy_bits) out += "entropy_bits=" + format_bits(*r.entropy_bits) + "\n";
  if (r.opt_gap_bound) out += "opt_gap_bound=" + format_bits(*r.opt_gap_bound) + "\n";
  if (r.lower_bound_bits) out += "lower_bound_bits=" + format_bits(*r.lower_bound_bits) + "\n";
  if (r.elapsed_ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", *r.elapsed_ms);
    out += "elapsed_ms=" + std::string(buf) + "\n";
  }
  if (r.nodes_explored) out += "nodes_explored=" + std::to_string(*r.nodes_explored) + "\n";
  out += "optimal=" + std::string(to_string(r.optimal)) + "\n";
  return out;
}

// Splits report text into key/value pairs; blank lines separate reports.
inline std::vector<std::vector<std::pair<std::string, std::string>>> parse_reports(std::string_view text) {
  std::vector<std::vector<std::pair<std::string, std::string>>> reports(1);
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) {
      if (!reports.back().empty()) reports.emplace_back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw validation_error("report line without '=': " + line);
    reports.back().emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  if (reports.back().empty()) reports.pop_back();
  return reports;
}

}  // namespace mineo
