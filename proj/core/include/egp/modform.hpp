#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egp/egp.hpp"
#include "egp/modarith.hpp"

namespace egp {

/// eta(m z)^e
struct EtaFactor {
  std::uint64_t multiplier = 1;
  std::int64_t exponent = 1;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

struct EtaProduct {
  std::vector<EtaFactor> factors;
  int sign = 1;

  /// sum m e / 24; throws unless it is a positive integer.
  std::int64_t leading_power() const;
  std::string to_string() const;
};

/// Accepts e.g. "-1 * eta(4)^6", "-eta(4z)^6", "eta(2)^4 * eta(4)^4", "eta(z)^4 eta(2z)^2".
EtaProduct parse_eta_product(std::string_view text);

/// a_1..a_N; coefficient(n) for 1 <= n <= size().
struct CoeffSeries {
  std::vector<std::int64_t> coefficients;  // index 0 holds a_1
  std::string source;
  std::optional<int> weight;
  std::optional<int> level;

  std::size_t size() const { return coefficients.size(); }
  std::int64_t coefficient(std::size_t n) const;
};

inline constexpr std::size_t kDefaultSeriesLength = 128;

/// Exact integer q-expansion of sign * q^{leading} prod_m prod_n (1 - q^{m n})^e up to q^N.
/// Throws std::overflow_error if a coefficient leaves int64.
CoeffSeries eta_expand(const EtaProduct& e, std::size_t n = kDefaultSeriesLength);

/// Lines "n,a_n"; '#' comments and a non-numeric header line are skipped. Every
/// n from 1 to the largest given must appear exactly once.
CoeffSeries parse_coefficient_csv(std::string_view text, std::string source = "csv");
CoeffSeries read_coefficient_csv(const std::string& path);

/// a_p mod p for every p; throws if the series is shorter than some p.
std::vector<Residue> residue_sequence(const CoeffSeries& c, const std::vector<std::uint64_t>& primes);

struct ModformCell {
  std::uint64_t prime = 0;
  std::optional<Residue> egp;
  Residue form = 0;  // a_p mod p, after the chosen variate orientation
  bool variate = false;
  bool match = false;
};

struct ModformReport {
  std::vector<ModformCell> cells;
  /// +1 keeps a_p at variate primes, -1 negates all of them; the better of the two.
  int orientation = 1;
  /// -1 when every a_p was negated as well (only with allow_overall_sign).
  int overall_sign = 1;
  std::size_t compared = 0;
  std::size_t matched = 0;
  bool all_match = false;
  std::optional<std::uint64_t> first_mismatch;
  std::string verdict;
};

/// Compares every prime of `s` carrying a residue. Fixed primes must agree exactly;
/// variate primes agree after one global sign choice. With allow_overall_sign the
/// whole form may also be negated.
ModformReport compare(const EgpSequence& s, const CoeffSeries& c, bool allow_overall_sign = false);

}  // namespace egp
