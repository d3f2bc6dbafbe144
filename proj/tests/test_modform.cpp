#include <doctest.h>

#include "egp/catalog.hpp"
#include "egp/egp.hpp"
#include "egp/modform.hpp"

using namespace egp;

namespace {

EgpSequence catalog_sequence(const char* name, std::uint64_t bound) {
  return canonicalize_sign(egp::egp(load_catalog().find(name).decompleted(0), bound));
}

}  // namespace

TEST_CASE("eta expansions") {
  const CoeffSeries a = eta_expand(parse_eta_product("-1 * eta(4)^6"), 10);
  CHECK(a.coefficient(1) == -1);
  CHECK(a.coefficient(3) == 0);
  CHECK(a.coefficient(5) == 6);

  CHECK(eta_expand(parse_eta_product("eta(2)^4 * eta(4)^4"), 5).coefficient(5) == -2);

  const CoeffSeries c = eta_expand(parse_eta_product("eta(2)^12"), 12);
  CHECK(c.coefficient(1) == 1);
  CHECK(c.coefficient(3) == -12);
  CHECK(c.coefficient(5) == 54);
  CHECK(c.coefficient(2) * c.coefficient(3) == c.coefficient(6));

  // Ramanujan tau
  const CoeffSeries d = eta_expand(parse_eta_product("eta(z)^24"), 7);
  CHECK(d.coefficient(1) == 1);
  CHECK(d.coefficient(2) == -24);
  CHECK(d.coefficient(3) == 252);
  CHECK(d.coefficient(5) == 4830);
  CHECK(d.coefficient(2) * d.coefficient(3) == d.coefficient(6));

  CHECK_THROWS(eta_expand(parse_eta_product("eta(1)^2"), 5));
  CHECK_THROWS(d.coefficient(8));
}

TEST_CASE("eta parsing") {
  const EtaProduct a = parse_eta_product("-eta(4z)^6");
  CHECK(a.sign == -1);
  CHECK(a.factors == std::vector<EtaFactor>{{4, 6}});
  CHECK(a.leading_power() == 1);
  const EtaProduct b = parse_eta_product("eta(z)^4 eta(2z)^2 * eta(4z)^4");
  CHECK(b.factors.size() == 3);
  CHECK(b.leading_power() == 1);
  CHECK(parse_eta_product(a.to_string()).factors == a.factors);
  CHECK_THROWS(parse_eta_product("zeta(3)"));
  CHECK_THROWS(parse_eta_product(""));
}

TEST_CASE("coefficient csv") {
  const CoeffSeries s = parse_coefficient_csv("n,a_n\n# weight 6\n1,1\n2,0\n3,-12\n");
  CHECK(s.size() == 3);
  CHECK(s.coefficient(3) == -12);
  CHECK_THROWS(parse_coefficient_csv("1,1\n3,2\n"));
  CHECK_THROWS(parse_coefficient_csv("1,1\n1,2\n"));
  CHECK_THROWS(parse_coefficient_csv("1,x\n"));
  CHECK(residue_sequence(s, {3}) == std::vector<Residue>{0});
  CHECK_THROWS(residue_sequence(s, {5}));
}

TEST_CASE("residue sequences") {
  const CoeffSeries a = eta_expand(parse_eta_product("-eta(4z)^6"), 50);
  const auto& cat = load_catalog();
  const auto r = residue_sequence(a, cat.primes);
  CHECK(r[1] == 1);  // p = 5
  for (std::size_t i = 0; i < cat.primes.size(); ++i)
    if (cat.primes[i] % 4 == 3) CHECK(r[i] == 0);
}

TEST_CASE("comparisons against catalog graphs") {
  const CoeffSeries e12 = eta_expand(parse_eta_product("eta(2)^12"));
  const ModformReport wrong = compare(catalog_sequence("P_4_1", 41), e12);
  CHECK_FALSE(wrong.all_match);
  REQUIRE(wrong.first_mismatch);
  CHECK(*wrong.first_mismatch <= 13);

  const ModformReport p64 = compare(catalog_sequence("P_6_4", 41), e12);
  CHECK(p64.all_match);
  CHECK(p64.compared == 12);

  const ModformReport p31 = compare(catalog_sequence("P_3_1", 41), eta_expand(parse_eta_product("-eta(4z)^6")));
  CHECK(p31.all_match);

  // only matches after negating the whole form
  const CoeffSeries f = eta_expand(parse_eta_product("eta(z)^4 eta(2z)^2 eta(4z)^4"));
  const EgpSequence sq = catalog_sequence("P_3_1_sq", 41);
  CHECK_FALSE(compare(sq, f).all_match);
  const ModformReport neg = compare(sq, f, true);
  CHECK(neg.all_match);
  CHECK(neg.overall_sign == -1);
}
