#include <doctest.h>

#include <optional>

#include "egp/catalog.hpp"
#include "egp/egp.hpp"
#include "egp/families.hpp"
#include "egp/gperm.hpp"
#include "egp/graph_io.hpp"
#include "egp/modarith.hpp"
#include "egp/transforms.hpp"

using namespace egp;

namespace {

GraphDocument fixture(const char* name) { return read_graph_file(std::string(EGP_TEST_DATA_DIR) + "/" + name); }

OrientedGraph k4() { return OrientedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 0); }

FourCutSpec p74_cut() {
  const auto& cat = load_catalog();
  for (const auto& rel : cat.find("P_7_4").relations)
    if (rel.kind == "twist" && rel.cut) return *rel.cut;
  FAIL("P_7_4 has no stored cut");
  return {};
}

}  // namespace

TEST_CASE("twist") {
  const auto& cat = load_catalog();
  const OrientedGraph g = *cat.find("P_7_4").completed;
  const FourCutSpec cut = p74_cut();
  const OrientedGraph t = schnetz_twist(g, cut);
  CHECK(isomorphic(t, *cat.find("P_7_7").completed));
  CHECK_FALSE(isomorphic(t, g));
  CHECK(schnetz_twist(t, cut) == g);
  for (std::uint64_t p : {3, 5, 13}) {
    const Residue a = gperm(decomplete(g, 0), p, Algorithm::cofactor);
    const Residue b = gperm(decomplete(t, 0), p, Algorithm::cofactor);
    CHECK(equal_up_to_variate_sign(a, b, p, is_variate(block_spec(decomplete(g, 0)), (p - 1) / 2)));
  }

  FourCutSpec bad = cut;
  bad.cut[1] = bad.cut[0];
  CHECK_THROWS_AS(schnetz_twist(g, bad), std::invalid_argument);
  FourCutSpec empty = cut;
  empty.left.clear();
  CHECK_THROWS_AS(schnetz_twist(g, empty), std::invalid_argument);
  // K5 has no separating 4-cut
  CHECK_THROWS_AS(schnetz_twist(circulant(5, 1, 2), FourCutSpec{{0, 1, 2, 3}, {4}}), std::invalid_argument);
}

TEST_CASE("dual of K4 is K4") {
  const GraphDocument doc = fixture("k4_plane.txt");
  REQUIRE(doc.rotation);
  CHECK(face_count(doc.graph, *doc.rotation) == 4);
  const PlanarDual d = planar_dual(doc.graph, *doc.rotation);
  CHECK(isomorphic(d.graph, k4()));
  CHECK(d.graph.edge_count() == 6);
  const PlanarDual dd = planar_dual(d.graph, d.rotation);
  CHECK(isomorphic(dd.graph, doc.graph));
}

TEST_CASE("wheel W4 is self-dual") {
  const GraphDocument doc = fixture("w4_plane.txt");
  REQUIRE(doc.rotation);
  const PlanarDual d = planar_dual(doc.graph, *doc.rotation);
  CHECK(isomorphic(d.graph, wheel(4)));
  CHECK(face_count(doc.graph, *doc.rotation) == 2 + doc.graph.edge_count() - doc.graph.vertex_count());
}

TEST_CASE("the plane decompletion of P7,5 dualizes to P7,10") {
  const auto& cat = load_catalog();
  const GraphDocument doc = fixture("p7_5_decompleted_plane.txt");
  REQUIRE(doc.rotation);
  CHECK(isomorphic(complete(doc.graph), *cat.find("P_7_5").completed));
  const PlanarDual d = planar_dual(doc.graph, *doc.rotation);
  CHECK(d.graph.vertex_count() == 2 + doc.graph.edge_count() - doc.graph.vertex_count());
  CHECK(isomorphic(complete(d.graph), *cat.find("P_7_10").completed));
  CHECK(block_spec(d.graph).row_copies == block_spec(doc.graph).row_copies);
  CHECK(isomorphic(planar_dual(d.graph, d.rotation).graph, doc.graph));
  const auto a = canonicalize_sign(egp::egp(doc.graph, 13));
  const auto b = canonicalize_sign(egp::egp(d.graph, 13));
  CHECK(sequences_equal(a, b));
}

TEST_CASE("non-planar rotation is rejected") {
  // K4 with one vertex's rotation reversed is a torus embedding
  GraphDocument doc = fixture("k4_plane.txt");
  std::swap(doc.rotation->order[0][1], doc.rotation->order[0][2]);
  CHECK(face_count(doc.graph, *doc.rotation) == 2);
  CHECK_THROWS_AS(planar_dual(doc.graph, *doc.rotation), std::invalid_argument);
}

TEST_CASE("dual factorial relation away from phi4 graphs") {
  // triangle and its dual, three parallel edges; calV = 3 on both sides
  const OrientedGraph tri(3, {{0, 1}, {1, 2}, {0, 2}}, 0);
  const Rotation rot{{{0, 2}, {0, 1}, {1, 2}}};
  const PlanarDual d = planar_dual(tri, rot);
  CHECK(isomorphic(d.graph, banana(3)));
  const BlockSpec s = block_spec(tri), sd = block_spec(d.graph);
  CHECK(s.row_copies == sd.row_copies);
  CHECK(s.column_copies + sd.column_copies == s.row_copies);
  for (std::uint64_t p : admissible_primes(s, 61)) {
    const std::uint64_t n = (p - 1) / s.row_copies;
    FactorialTable t(p, p);
    const Modulus& mod = t.mod();
    const std::int64_t e = static_cast<std::int64_t>(tri.edge_count()), v = static_cast<std::int64_t>(tri.vertex_count());
    const Residue factor = mod.mul(mod.sign(e - v + 1), mod.pow(t.fact(n * s.column_copies), tri.edge_count()));
    const Residue lhs = gperm(tri, p, Algorithm::cofactor);
    const Residue rhs = mod.mul(factor, gperm(d.graph, p, Algorithm::cofactor));
    CHECK_MESSAGE(equal_up_to_variate_sign(lhs, rhs, p, is_variate(s, n) || is_variate(sd, n)), "p=" << p);
  }
}

TEST_CASE("two-vertex split") {
  const auto& cat = load_catalog();
  const OrientedGraph big = *cat.find("P_3_1_sq").completed;
  bool found = false;
  for (std::size_t v = 0; v < big.vertex_count() && !found; ++v) {
    const OrientedGraph g = decomplete(big, v);
    for (std::size_t a = 0; a < g.vertex_count() && !found; ++a)
      for (std::size_t b = a + 1; b < g.vertex_count() && !found; ++b) {
        std::optional<std::pair<OrientedGraph, OrientedGraph>> split;
        try {
          split = two_vertex_split(g, a, b);
        } catch (const std::invalid_argument&) {
          continue;
        }
        const auto& sides = *split;
        if (!is_phi4_ratio(sides.first) || !is_phi4_ratio(sides.second)) continue;
        found = true;
        CHECK(isomorphic(sides.first, k4()));
        CHECK(isomorphic(sides.second, k4()));
        const Residue whole = gperm(g, 13, Algorithm::cofactor);
        CHECK(gperm(sides.first, 13, Algorithm::cofactor) == 3);
        CHECK(whole == (13 - 9) % 13);
        for (std::uint64_t p : {5, 7, 11, 17}) {
          const Modulus mod(p);
          const Residue prod = mod.neg(mod.mul(gperm(sides.first, p, Algorithm::cofactor),
                                               gperm(sides.second, p, Algorithm::cofactor)));
          CHECK(equal_up_to_variate_sign(gperm(g, p, Algorithm::cofactor), prod, p, true));
        }
      }
  }
  CHECK(found);
  CHECK_THROWS_AS(two_vertex_split(k4(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(two_vertex_split(k4(), 2, 2), std::invalid_argument);
}

TEST_CASE("involutions") {
  const OrientedGraph path(3, {{0, 1}, {1, 2}}, 0);
  const auto inv = find_involutions(path);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].permutation == std::vector<std::size_t>{2, 1, 0});
  CHECK(inv[0].crossing_edge_count == 0);
  CHECK(inv[0].fixed_vertex_count == 1);
  CHECK_FALSE(symmetry_zero_predicate(path));

  CHECK(symmetry_zero_predicate(wheel(3)));
  CHECK(symmetry_zero_predicate(k4()));
  CHECK(symmetry_zero_predicate(wheel(5)));
  CHECK_FALSE(symmetry_zero_predicate(wheel(4)));

  const auto& cat = load_catalog();
  const OrientedGraph p711 = cat.find("P_7_11").decompleted(0);
  CHECK_FALSE(symmetry_zero_predicate(p711));
  for (const auto& i : find_involutions(p711)) {
    CHECK(i.crossing_edge_count % 2 == 0);
  }
  CHECK_THROWS_AS(find_involutions(circulant(17, 1, 2)), CapExceeded);
}
