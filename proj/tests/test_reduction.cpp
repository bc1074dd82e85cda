#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "mineo/entropy.hpp"
#include "mineo/orient.hpp"
#include "mineo/reduction.hpp"

using namespace mineo;

namespace {

exact_cover_instance trivial_q3() { return exact_cover_instance(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}); }

// q = 6 with exact cover {0, 1}: sets 0 and 1 split the ground set, the rest
// fill up the occurrence counts.
exact_cover_instance q6() {
  return exact_cover_instance(6, {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}, {1, 2, 5}, {0, 1, 3}, {2, 4, 5}});
}

std::size_t arcs_leaving(const reduction_bundle& b, const orientation& o, std::size_t j) {
  std::size_t out = 0;
  for (const auto e : b.boundary_edges[j]) {
    if (o.head(e) >= 6 * b.q) ++out;
  }
  return out;
}

}  // namespace

TEST(ExactCoverInstance, Validation) {
  EXPECT_NO_THROW(trivial_q3());
  EXPECT_NO_THROW(q6());
  EXPECT_THROW(exact_cover_instance(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), validation_error);
  EXPECT_THROW(exact_cover_instance(3, {{0, 1, 2}, {0, 1, 2}}), validation_error);
  EXPECT_THROW(exact_cover_instance(3, {{0, 1, 1}, {0, 1, 2}, {0, 2, 2}}), validation_error);
  EXPECT_THROW(exact_cover_instance(3, {{0, 1, 5}, {0, 1, 2}, {0, 1, 2}}), validation_error);
  // Element 2 in four sets, element 5 in two.
  EXPECT_THROW(exact_cover_instance(6, {{0, 1, 2}, {3, 4, 2}, {0, 3, 4}, {1, 2, 5}, {0, 1, 3}, {2, 4, 5}}),
               validation_error);
}

TEST(Gadget, Structure) {
  const auto g = gadget();
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 9u);
  for (vertex_id v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 3u);
  // Two vertex-disjoint triangles: {0,1,2} and {3,4,5}.
  const auto has = [&](vertex_id a, vertex_id b) {
    for (const auto& [u, v] : g.edges()) {
      if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
  };
  for (const auto& [a, b, c] : {std::array<vertex_id, 3>{0, 1, 2}, std::array<vertex_id, 3>{3, 4, 5}}) {
    EXPECT_TRUE(has(a, b) && has(b, c) && has(a, c));
  }
}

TEST(Claim1, TableRows) {
  EXPECT_EQ(claim1_expected_inseq(0), (degree_sequence{4, 3, 3, 1, 1, 0}));
  EXPECT_EQ(claim1_expected_inseq(1), (degree_sequence{4, 3, 3, 1, 0, 0}));
  EXPECT_EQ(claim1_expected_inseq(2), (degree_sequence{4, 3, 2, 1, 0, 0}));
  EXPECT_EQ(claim1_expected_inseq(3), (degree_sequence{3, 3, 2, 1, 0, 0}));
  EXPECT_THROW(claim1_expected_inseq(4), validation_error);
  EXPECT_THROW(claim1_expected_inseq(-1), validation_error);
}

TEST(Claim1, PrismGadgetPasses) {
  const auto results = check_claim1_table(gadget());
  ASSERT_EQ(results.size(), 8u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.matches) << "pattern " << r.boundary;
    EXPECT_EQ(r.best.total(), 12u - static_cast<std::size_t>(r.delta));
  }
  EXPECT_TRUE(verify_claim1_table(gadget()));
}

TEST(Claim1, MissingTriangleEdgeFails) {
  const multigraph broken(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(verify_claim1_table(broken));
}

TEST(Claim1, WrongShapeRejected) {
  EXPECT_THROW(verify_claim1_table(multigraph(5, {{0, 1}})), validation_error);
}

TEST(Reduction, Q3Instance) {
  const auto b = gen_reduction(trivial_q3());
  EXPECT_EQ(b.graph.vertex_count(), 21u);
  EXPECT_EQ(b.graph.edge_count(), 36u);
  const double closed = (12 * std::log2(9.0) + 21 * std::log2(12.0) + 3 * std::log2(36.0)) / 36.0;
  EXPECT_NEAR(b.target_entropy, closed, 1e-12);
  EXPECT_NEAR(b.target_entropy, 3.578697, 1e-6);
}

TEST(Reduction, CountsAndDegrees) {
  for (const auto& xc : {trivial_q3(), q6()}) {
    const auto b = gen_reduction(xc);
    const auto q = xc.q();
    EXPECT_EQ(b.graph.vertex_count(), 7 * q);
    EXPECT_EQ(b.graph.edge_count(), 12 * q);
    for (const auto s : b.set_vertex) EXPECT_EQ(b.graph.degree(s), 3u);
    for (const auto& xs : b.gadget_vertices) {
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(b.graph.degree(xs[k]), 4u);
      for (std::size_t k = 3; k < 6; ++k) EXPECT_EQ(b.graph.degree(xs[k]), 3u);
    }
    // Without boundary edges: q disjoint 9-edge gadgets.
    std::set<edge_id> boundary;
    for (const auto& be : b.boundary_edges) boundary.insert(be.begin(), be.end());
    EXPECT_EQ(boundary.size(), 3 * q);
    for (std::size_t j = 0; j < q; ++j) {
      for (const auto e : b.internal_edges[j]) {
        const auto& [u, v] = b.graph.edge_at(e);
        EXPECT_EQ(u / 6, j);
        EXPECT_EQ(v / 6, j);
      }
      for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(b.graph.edge_at(b.boundary_edges[j][k]).v, b.set_vertex[b.boundary_sets[j][k]]);
      }
    }
  }
}

TEST(Certificate, Q3CoverBySetZero) {
  const auto b = gen_reduction(trivial_q3());
  const std::vector<std::uint32_t> cover{0};
  const auto o = certificate_orientation(b, cover);
  EXPECT_NEAR(entropy_bits(o), b.target_entropy, 1e-9);
  EXPECT_EQ(in_degree_sequence(o, b.set_vertex), (degree_sequence{3, 0, 0}));
  for (std::size_t j = 0; j < b.q; ++j) {
    EXPECT_EQ(in_degree_sequence(o, b.gadget_vertices[j]), (degree_sequence{4, 3, 3, 1, 0, 0}));
    EXPECT_EQ(arcs_leaving(b, o, j), 1u);
  }
}

TEST(Certificate, Q6) {
  const auto b = gen_reduction(q6());
  const std::vector<std::uint32_t> cover{1, 0};
  const auto o = certificate_orientation(b, cover);
  EXPECT_NEAR(entropy_bits(o), b.target_entropy, 1e-9);
  EXPECT_EQ(in_degree_sequence(o, b.set_vertex), (degree_sequence{3, 3, 0, 0, 0, 0}));
  for (std::size_t j = 0; j < b.q; ++j) {
    EXPECT_EQ(in_degree_sequence(o, b.gadget_vertices[j]), (degree_sequence{4, 3, 3, 1, 0, 0}));
    EXPECT_EQ(arcs_leaving(b, o, j), 1u);
  }
  // No single reversal improves the certificate.
  EXPECT_NEAR(improve_by_flips(b.graph, o).entropy, entropy_bits(o), 1e-12);
}

TEST(Certificate, RejectsNonExactCover) {
  const auto b = gen_reduction(q6());
  const std::vector<std::uint32_t> overlap{0, 2};
  try {
    certificate_orientation(b, overlap);
    FAIL();
  } catch (const validation_error& e) {
    EXPECT_NE(std::string(e.what()).find("element 0 covered 2 times"), std::string::npos);
  }
  const std::vector<std::uint32_t> partial{0};
  EXPECT_THROW(certificate_orientation(b, partial), validation_error);
  const std::vector<std::uint32_t> dup{0, 0, 1};
  EXPECT_THROW(certificate_orientation(b, dup), validation_error);
  const std::vector<std::uint32_t> range{7};
  EXPECT_THROW(certificate_orientation(b, range), validation_error);
}
