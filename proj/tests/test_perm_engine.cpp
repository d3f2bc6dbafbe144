#include <doctest.h>

#include <numeric>
#include <random>

#include "egp/block.hpp"
#include "egp/catalog.hpp"
#include "egp/families.hpp"
#include "egp/gperm.hpp"
#include "egp/modarith.hpp"
#include "egp/ryser.hpp"

using namespace egp;

namespace {

// Sum over all permutations.
BigInt leibniz(const IntMatrix& m) {
  std::vector<std::size_t> s(m.rows());
  std::iota(s.begin(), s.end(), 0);
  BigInt total = 0;
  do {
    BigInt term = 1;
    for (std::size_t i = 0; i < s.size() && term != 0; ++i) term *= m(i, s[i]);
    total += term;
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = lo + static_cast<int>(rng() % (hi - lo + 1));
  return m;
}

Residue mod_of(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

OrientedGraph k3() { return OrientedGraph(3, {{1, 0}, {2, 1}, {2, 0}}, 2); }
OrientedGraph k4() { return OrientedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 0); }

}  // namespace

TEST_CASE("small permanents") {
  CHECK(perm_exact(IntMatrix::ones(2, 2)) == 2);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(perm_exact(IntMatrix::identity(n)) == 1);
  CHECK(perm_mod(IntMatrix::ones(2, 2), 3) == 2);
  CHECK(perm_mod(IntMatrix::ones(4, 4), 5) == 4);
}

TEST_CASE("Ryser agrees with the permutation sum") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const IntMatrix m = random_matrix(rng, n, n, -3, 3);
    CHECK(perm_exact(m) == leibniz(m));
  }
  const IntMatrix k3bar = reduced_incidence(k3()).matrix.tile(3, 2);
  CHECK(perm_exact(k3bar) == leibniz(k3bar));
}

TEST_CASE("perm_mod agrees with perm_exact") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const IntMatrix m = random_matrix(rng, 8, 8, -1, 1);
    for (std::uint64_t p : {3, 5, 7, 11, 13}) CHECK(perm_mod(m, p) == mod_of(perm_exact(m), p));
  }
}

TEST_CASE("Ryser cap is named when exceeded") {
  const IntMatrix big = IntMatrix::ones(ryser_cap() + 1, ryser_cap() + 1);
  try {
    (void)perm_mod(big, 7);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("EGP_RYSER_CAP") != std::string::npos);
  }
}

TEST_CASE("k identical rows: permanent divisible by k!") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = 2 + rng() % 3, n = k + rng() % 3;
    IntMatrix m = random_matrix(rng, n, n, -2, 2);
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = m(0, j);
    BigInt f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    CHECK(perm_exact(m) % f == 0);
  }
}

TEST_CASE("block diagonal with a non-square block has permanent 0") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    IntMatrix m(5, 5);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = 1 + rng() % 4;
    for (std::size_t i = 2; i < 5; ++i)
      for (std::size_t j = 3; j < 5; ++j) m(i, j) = 1 + rng() % 4;
    CHECK(perm_exact(m) == 0);
  }
}

TEST_CASE("Wilson helpers") {
  for (std::uint64_t p : primes_up_to(101)) {
    FactorialTable t(p, p - 1);
    const Modulus& mod = t.mod();
    CHECK(t.fact(p - 1) == p - 1);
    CHECK(wilson_factorial(p) == p - 1);
    for (std::uint64_t a = 0; a < p; ++a) {
      const std::uint64_t b = p - 1 - a;
      CHECK(mod.mul(t.fact(a), t.fact(b)) == mod.mul(mod.sign(static_cast<std::int64_t>(b)), t.fact(p - 1)));
    }
    if (p > 2) {
      const std::uint64_t n = (p - 1) / 2;
      const Residue sq = mod.mul(t.fact(n), t.fact(n));
      CHECK(sq == (n % 2 == 0 ? p - 1 : 1));
    }
  }
  for (std::uint64_t m : {4, 6, 8, 9, 10, 12, 15}) CHECK(wilson_factorial(m) != m - 1);
}

TEST_CASE("factorial table binomials") {
  FactorialTable t(13, 12);
  CHECK(t.binom(12, 5) == 792 % 13);
  CHECK(t.binom(30, 7) == 2035800 % 13);  // Lucas
  CHECK(t.binom(5, 7) == 0);
  CHECK(t.binom(5, -1) == 0);
  CHECK(t.falling(7, 3) == 210 % 13);
}

TEST_CASE("row reduction of the zig-zag incidence matrix") {
  // five-vertex zig-zag: path columns, then skip edges, then the closing edge
  const IntMatrix m = IntMatrix::from_rows({{1, 0, 0, 0, 1, 0, 0, 1},
                                            {-1, 1, 0, 0, 0, 1, 0, 0},
                                            {0, -1, 1, 0, -1, 0, 1, 0},
                                            {0, 0, -1, 1, 0, -1, 0, 0}});
  const RowReduction rr = blockwise_row_reduce(BlockMatrix{m, 2, 1}, 5);
  CHECK(rr.rank == 4);
  CHECK(rr.matrix.base == IntMatrix::from_rows({{1, 0, 0, 0, 1, 0, 0, 1},
                                                {0, 1, 0, 0, 1, 1, 0, 1},
                                                {0, 0, 1, 0, 0, 1, 1, 1},
                                                {0, 0, 0, 1, 0, 0, 1, 1}}));
  // idempotent on [I | A]
  const RowReduction again = blockwise_row_reduce(rr.matrix, 5);
  CHECK(again.matrix.base == rr.matrix.base);

  const OrientedGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, 0);
  CHECK_THROWS_AS(blockwise_row_reduce(BlockMatrix{reduced_incidence(two_triangles).matrix, 1, 1}, 7), RankDeficient);
}

TEST_CASE("multiset permanents agree with the materialized matrix") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
    const IntMatrix base = random_matrix(rng, r, c, -2, 2);
    const std::size_t lcm = std::lcm(r, c);
    const std::size_t k = 1 + rng() % 2;
    const BlockMatrix bm{base, k * lcm / r, k * lcm / c};
    if (bm.rows() > 12) continue;
    const BigInt exact = perm_exact(bm.materialize());
    CHECK(perm_block_exact(bm) == exact);
    for (std::uint64_t p : {5, 7, 11, 13}) {
      FactorialTable tab(p, bm.rows());
      CHECK(perm_block_mod(bm, tab) == mod_of(exact, p));
    }
  }
}

TEST_CASE("composite-modulus vanishing") {
  for (const OrientedGraph& g : {k3(), k4(), banana(2)}) {
    const BlockSpec s = block_spec(g);
    const IntMatrix m = reduced_incidence(g).matrix;
    for (std::uint64_t mod : {4, 6, 8, 9, 10}) {
      const BigInt v = perm_block_exact(BlockMatrix{m, (mod - 1) * s.row_copies, (mod - 1) * s.column_copies});
      CHECK(v % mod == 0);
    }
  }
}

TEST_CASE("single prime values") {
  CHECK(gperm_direct(banana(2), 5) == 4);
  CHECK(gperm_cofactor(k4(), 13) == 3);
  CHECK(gperm_reduced(k4(), 5) == 1);
  CHECK(gperm_cofactor(k4(), 5) == 1);
  CHECK(gperm_reduced(wheel(4), 5) == 3);
  CHECK(gperm_cofactor(wheel(4), 5) == 3);
  CHECK_THROWS_AS(gperm_direct(k4(), 4), NotAdmissible);
  CHECK_THROWS_AS(gperm_direct(k3(), 5), NotAdmissible);
}

TEST_CASE("tree base case: n! at p = n + 1") {
  const OrientedGraph edge = path_tree(2);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    FactorialTable t(p, p);
    CHECK(gperm_cofactor(edge, p) == t.fact(p - 1));
    CHECK(gperm_cofactor(edge, p) == p - 1);
  }
}

TEST_CASE("algorithms agree on catalog graphs") {
  const Catalog& cat = load_catalog();
  for (const auto& e : cat.entries) {
    if (!e.completed || e.loops > 6) continue;
    const OrientedGraph g = e.decompleted(0);
    const BlockSpec s = block_spec(g);
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
      const std::uint64_t n = require_prime_index(s, p);
      const Residue red = gperm_reduced(g, p);
      const Residue cof = gperm_cofactor(g, p);
      const Residue idx = gperm_cofactor(g, p, EliminationOrder::index);
      CHECK_MESSAGE(red == cof, e.name << " p=" << p);
      CHECK_MESSAGE(idx == cof, e.name << " p=" << p);
      if (n * s.lcm <= 20) CHECK_MESSAGE(gperm_direct(g, p) == red, e.name << " p=" << p);
    }
  }
}

TEST_CASE("algorithms agree on random small graphs") {
  std::mt19937_64 rng(6);
  int tested = 0;
  while (tested < 40) {
    const std::size_t nv = 2 + rng() % 4, ne = 1 + rng() % 7;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ne; ++i) edges.push_back({rng() % nv, rng() % nv});
    const OrientedGraph g(nv, edges, rng() % nv);
    const BlockSpec s = block_spec(g);
    for (std::uint64_t p : primes_up_to(13)) {
      const auto n = prime_index(s, p);
      if (!n || *n * s.lcm > 14) continue;
      const Residue d = gperm_direct(g, p);
      if (!is_connected(g)) {
        CHECK(d == 0);
        CHECK_THROWS_AS(gperm_reduced(g, p), RankDeficient);
        continue;
      }
      CHECK(gperm_reduced(g, p) == d);
      CHECK(gperm_cofactor(g, p) == d);
      ++tested;
    }
  }
}
