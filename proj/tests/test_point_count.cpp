#include <doctest.h>

#include <random>

#include "egp/families.hpp"
#include "egp/gperm.hpp"
#include "egp/modarith.hpp"
#include "egp/point_count.hpp"
#include "egp/ryser.hpp"

using namespace egp;

namespace {

OrientedGraph k3() { return OrientedGraph(3, {{0, 1}, {1, 2}, {0, 2}}, 0); }
OrientedGraph k4() { return OrientedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 0); }

// Plain odometer over F_p^L, evaluating every factor of F~ from scratch.
std::uint64_t naive_count(const OrientedGraph& g, std::uint64_t p) {
  const BlockSpec s = block_spec(g);
  const IntMatrix m = reduced_incidence(g).matrix;
  const std::size_t e = g.edge_count(), L = s.lcm;
  const auto sp = static_cast<std::int64_t>(p);
  std::vector<std::int64_t> y(L, 0);
  std::uint64_t hits = 0;
  while (true) {
    bool zero = false;
    for (std::size_t i = 0; i < m.rows() && !zero; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < L; ++j) {
        std::int64_t pw = 1;
        for (std::size_t k = 0; k < s.row_copies; ++k) pw = pw * y[j] % sp;
        acc = (acc + m(i, j % e) * pw) % sp;
      }
      zero = (acc % sp + sp) % sp == 0;
    }
    hits += zero;
    std::size_t j = 0;
    while (j < L && ++y[j] == sp) y[j++] = 0;
    if (j == L) break;
  }
  return hits;
}

}  // namespace

TEST_CASE("permanent polynomial") {
  CHECK(permanent_polynomial(banana(2)).to_string() == "(x1 + x2)^2");
  CHECK(permanent_polynomial(banana(2)).to_string(true) == "(y1^2 + y2^2)");
  const OrientedGraph g(4, {{3, 0}, {3, 1}, {3, 2}, {1, 0}, {0, 2}, {2, 1}}, 3);
  CHECK(permanent_polynomial(g).to_string() == "(x1 + x4 - x5)^2 (x2 - x4 + x6)^2 (x3 + x5 - x6)^2");
  const OrientedGraph shaped(4, {{1, 0}, {2, 0}, {3, 0}, {2, 1}, {3, 1}, {3, 2}}, 3);
  CHECK(permanent_polynomial(shaped).to_string() == "(x1 + x2 + x3)^2 (-x1 + x4 + x5)^2 (-x2 - x4 + x6)^2");
  const LinearFormProduct f = permanent_polynomial(k3());
  CHECK(f.forms.size() == 2);
  CHECK(f.multiplicity == 3);  // L = 6 over two rows
  CHECK(f.variable_count() == 6);
}

TEST_CASE("point counts") {
  CHECK(point_count(banana(2), 3) == 1);
  CHECK(point_count(banana(2), 5) == 9);
  CHECK(point_count(k4(), 3) == naive_count(k4(), 3));
  CHECK(point_count(k4(), 3) % 3 == 0);
  CHECK(point_count(k4(), 5) == naive_count(k4(), 5));
  CHECK(point_count(k3(), 3) == naive_count(k3(), 3));
  CHECK(point_count(k4(), 5, 1) == point_count(k4(), 5, 3));
  CHECK_THROWS_AS(point_count(k4(), 4), std::invalid_argument);
  CHECK_THROWS_AS(point_count(wheel(5), 7), CapExceeded);
}

TEST_CASE("special vertex does not change the count mod p") {
  for (std::size_t v = 1; v < 4; ++v) CHECK(point_count(k4().with_special(v), 3) % 3 == point_count(k4(), 3) % 3);
}

TEST_CASE("phi4 ratio graphs have even counts over F_2") {
  for (const OrientedGraph& g : {banana(2), k4(), zigzag(5)}) CHECK(point_count(g, 2) % 2 == 0);
}

TEST_CASE("coefficient chain equals the direct permanent") {
  CHECK(coefficient_oracle(banana(2), 5) == 4);
  CHECK(coefficient_oracle(k4(), 3) == 0);
  for (std::uint64_t p : {3, 5, 7}) {
    CHECK(coefficient_oracle(banana(2), p) == gperm_direct(banana(2), p));
  }
  CHECK(coefficient_oracle(k3(), 7) == gperm_direct(k3(), 7));
  CHECK(coefficient_oracle(k4(), 5) == gperm_direct(k4(), 5));
  CHECK(tilde_coefficient(banana(2), 5) == 6 % 5);

  std::mt19937_64 rng(9);
  int tested = 0;
  while (tested < 20) {
    const std::size_t nv = 2 + rng() % 3, ne = 1 + rng() % 5;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ne; ++i) edges.push_back({rng() % nv, rng() % nv});
    const OrientedGraph g(nv, edges, 0);
    const BlockSpec s = block_spec(g);
    if (s.lcm > 6) continue;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      if (!prime_index(s, p)) continue;
      CHECK(coefficient_oracle(g, p) == gperm_direct(g, p));
      ++tested;
    }
  }
}

TEST_CASE("extension identity") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 2;
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<std::int64_t>(rng() % 5) - 2;
    for (unsigned r = 1; r <= 3; ++r) CHECK(extension_coefficient(a, r) == perm_exact(a.tile(r, r)));
  }
  CHECK_THROWS(extension_coefficient(IntMatrix(2, 3), 2));
}

TEST_CASE("reconciliation reports") {
  const ReconcileReport b = reconcile(banana(2), 5, 1);
  CHECK(b.coefficient == Residue{1});
  CHECK(b.count == std::uint64_t{9});
  CHECK(b.count_sign == -1);
  CHECK(b.expected_count_sign == -1);
  CHECK(b.coefficient_matches_gperm == true);
  CHECK(b.holds_up_to_sign);

  const ReconcileReport k = reconcile(k4(), 3, 1);
  CHECK(k.gperm == 0);
  CHECK(k.count_mod_p == Residue{0});

  const ReconcileReport k5 = reconcile(k4(), 5, 1);
  CHECK_FALSE(k5.variate);
  CHECK(k5.holds_up_to_sign);
  CHECK(k5.empirical_sign != 0);
  REQUIRE(k5.stated_sign);
  CHECK(*k5.stated_sign == -1);

  CHECK(global_empirical_sign({b, k, k5}) == k5.empirical_sign);
  ReconcileReport flipped = k5;
  flipped.empirical_sign = -k5.empirical_sign;
  CHECK_FALSE(global_empirical_sign({k5, flipped}));
  CHECK_FALSE(global_empirical_sign({}));
}
