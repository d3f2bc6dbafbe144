#include <doctest.h>

#include <random>

#include "egp/catalog.hpp"
#include "egp/closed_forms.hpp"
#include "egp/egp.hpp"
#include "egp/expr.hpp"
#include "egp/families.hpp"
#include "egp/gperm.hpp"

using namespace egp;

namespace {

OrientedGraph k4() { return OrientedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 0); }

std::vector<Residue> residues(const EgpSequence& s) {
  std::vector<Residue> out;
  for (const auto& v : s.values) out.push_back(v.residue.value_or(999999));
  return out;
}

OrientedGraph random_orientation(const OrientedGraph& g, std::mt19937_64& rng) {
  auto f = std::make_unique<bool[]>(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) f[i] = rng() & 1;
  return g.with_flips(std::span<const bool>(f.get(), g.edge_count()));
}

}  // namespace

TEST_CASE("admissible primes") {
  CHECK(admissible_primes(BlockSpec{6, 2, 1}, 41) ==
        std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41});
  CHECK(admissible_primes(BlockSpec{3, 1, 1}, 7) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(admissible_primes(BlockSpec{20, 5, 2}, 71) == std::vector<std::uint64_t>{11, 31, 41, 61, 71});
  CHECK(admissible_primes(block_spec(OrientedGraph(3, {{0, 1}, {1, 2}, {0, 2}}, 0)), 20) ==
        std::vector<std::uint64_t>{7, 13, 19});
}

TEST_CASE("catalog rows") {
  const Catalog& cat = load_catalog();
  EgpSequence p51 = canonicalize_sign(egp::egp(cat.find("P_5_1").decompleted(0), 41));
  CHECK(residues(p51) == std::vector<Residue>{1, 1, 1, 5, 12, 16, 11, 13, 7, 1, 25, 9});
  EgpSequence ban = canonicalize_sign(egp::egp(banana(2), 13));
  CHECK(residues(ban) == std::vector<Residue>{1, 4, 1, 1, 12});
}

TEST_CASE("star tree: p - 1 at every prime") {
  const EgpSequence s = egp::egp(star_tree(4), 7);
  CHECK(residues(s) == std::vector<Residue>{1, 2, 4, 6});
}

TEST_CASE("canonical sign") {
  EgpSequence raw = egp::egp(banana(2), 13);
  CHECK(raw.values[0].variate);
  const EgpSequence c = canonicalize_sign(raw);
  CHECK(c.values[0].residue == Residue{1});
  CHECK(c.canonicalized);

  EgpSequence zeros = raw;
  for (auto& v : zeros.values) v.residue = 0;
  CHECK(residues(canonicalize_sign(zeros)) == residues(zeros));

  const Catalog& cat = load_catalog();
  const EgpSequence completed = egp::egp(*cat.find("P_1_1").completed, 43);
  for (const auto& v : completed.values) CHECK_FALSE(v.variate);
  CHECK(residues(canonicalize_sign(completed)) == residues(completed));
}

TEST_CASE("variate primes") {
  // phi4 ratio: variate exactly at p = 3 mod 4
  for (const auto& v : egp::egp(wheel(4), 41).values) CHECK(v.variate == (v.prime % 4 == 3));
  // completed P4,1: calE = 5, variate at p = 13 mod 24
  const BlockSpec s = block_spec(circulant(6, 1, 2));
  for (auto p : admissible_primes(s, 400)) CHECK(is_variate(s, require_prime_index(s, p)) == (p % 24 == 13));
}

TEST_CASE("orientation fuzz") {
  std::mt19937_64 rng(21);
  const Catalog& cat = load_catalog();
  for (const char* name : {"P_3_1", "P_4_1", "P_5_1", "P_6_2"}) {
    const OrientedGraph g = cat.find(name).decompleted(0);
    const EgpSequence base = egp::egp(g, 23);
    for (int t = 0; t < 10; ++t) {
      const EgpSequence s = egp::egp(random_orientation(g, rng), 23);
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        const auto& a = base.values[i];
        const auto& b = s.values[i];
        if (!a.variate) {
          CHECK(*a.residue == *b.residue);
        } else {
          CHECK((*b.residue == *a.residue || *b.residue == (a.prime - *a.residue) % a.prime));
        }
      }
      CHECK(sequences_equal(canonicalize_sign(base), canonicalize_sign(s)));
    }
  }
}

TEST_CASE("disconnected graphs vanish") {
  const OrientedGraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, 0);
  for (const auto& v : egp::egp(g, 41).values) CHECK(v.residue == Residue{0});
  EgpOptions o;
  o.join_components = true;
  const EgpSequence joined = egp::egp(g, 41, o);
  bool nonzero = false;
  for (const auto& v : joined.values) nonzero = nonzero || (v.residue && *v.residue != 0);
  CHECK(nonzero);
}

TEST_CASE("sequence equality") {
  const Catalog& cat = load_catalog();
  const auto a = canonicalize_sign(egp::egp(cat.find("P_6_1").decompleted(0), 41));
  const auto b = canonicalize_sign(egp::egp(cat.find("P_6_4").decompleted(0), 41));
  const auto c = canonicalize_sign(egp::egp(cat.find("P_6_2").decompleted(0), 41));
  CHECK(sequences_equal(a, b));
  CHECK_FALSE(sequences_equal(a, c));
  CHECK(sequences_equal(a, a));
  CHECK_THROWS_AS(sequences_equal(a, canonicalize_sign(egp::egp(circulant(5, 1, 2), 71))), std::invalid_argument);
}

TEST_CASE("algorithm names") {
  CHECK(parse_algorithm("auto") == Algorithm::automatic);
  CHECK(parse_algorithm("cofactor") == Algorithm::cofactor);
  CHECK_THROWS(parse_algorithm("magic"));
}

TEST_CASE("closed forms") {
  CHECK(closed_form_tree(2, 5) == 4);
  for (std::uint64_t p : {3, 5, 7, 11}) CHECK(closed_form_tree(3, p) == 1);
  CHECK(closed_form_wheel(4, 5) == 3);
  CHECK(closed_form_wheel(3, 13) == 3);
  CHECK(closed_form_zigzag(4, 5) == 1);
  for (std::uint64_t p : {3, 7, 11, 19, 23}) {
    CHECK(closed_form_wheel(3, p) == 0);
    CHECK(closed_form_zigzag(4, p) == 0);
  }
  // W3 = K4 well beyond the table
  const EgpSequence k = canonicalize_sign(egp::egp(k4(), 199));
  for (const auto& v : k.values) CHECK_MESSAGE(closed_form_wheel(3, v.prime) == *v.residue, "p=" << v.prime);
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const Residue z = closed_form_zigzag(5, p);
    const Residue d = gperm(zigzag(5), p, Algorithm::reduced);
    CHECK(equal_up_to_variate_sign(z, d, p, p % 4 == 3));
  }
}

TEST_CASE("expressions reproduce the stored rows") {
  const Catalog& cat = load_catalog();
  std::size_t checked = 0;
  for (const auto& e : cat.entries) {
    const BinomialSumExpr* x = cat.decompleted_expression(e);
    if (!x || !e.row) continue;
    EgpSequence s;
    s.spec = BlockSpec{2 * (static_cast<std::uint64_t>(e.loops) + 1), 2, 1};
    for (std::size_t i = 0; i < cat.primes.size(); ++i) {
      EgpValue v;
      v.prime = cat.primes[i];
      v.n = (v.prime - 1) / 2;
      v.variate = v.n % 2 == 1;
      v.residue = eval_expr(*x, v.prime);
      s.values.push_back(v);
    }
    const auto c = canonicalize_sign(s);
    for (std::size_t i = 0; i < cat.primes.size(); ++i)
      CHECK_MESSAGE(*c.values[i].residue == (*e.row)[i], e.name << " p=" << cat.primes[i]);
    ++checked;
  }
  CHECK(checked == 19);
}

TEST_CASE("completed expressions") {
  const Catalog& cat = load_catalog();
  const BinomialSumExpr* p11 = cat.completed_expression(cat.find("P_1_1"));
  REQUIRE(p11);
  CHECK(eval_expr(*p11, 7) == 6);
  CHECK(eval_expr(*p11, 13) == 5);
  // (3n)!^2 (2n)! (-1)^n / n!^2 at n = 2
  CHECK(eval_expr_exact(*p11, 2) == BigInt(720) * 720 * 24 / 4);
  const BinomialSumExpr* p711 = cat.decompleted_expression(cat.find("P_7_11"));
  REQUIRE(p711);
  CHECK(eval_expr(*p711, 3) == 0);
}

TEST_CASE("expression grammar") {
  const auto xs = parse_expressions(R"(
    # sum of squared binomials
    EXPR demo MOD 2n + 1
      SUM x { BINOM(n, x)^2 }
      PREFACTOR fact(n)^0
    END
  )");
  REQUIRE(xs.size() == 1);
  CHECK(eval_expr_exact(xs[0], 3) == 20);
  CHECK(eval_expr(xs[0], 7) == 20 % 7);
  CHECK_THROWS(parse_expressions("EXPR broken MOD"));
}
