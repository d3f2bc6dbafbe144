#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egp/graph.hpp"
#include "egp/matrix.hpp"
#include "egp/modarith.hpp"
#include "egp/ryser.hpp"

namespace egp {

/// F = prod_i f_i^multiplicity over L edge variables, where f_i is the reduced
/// incidence row of vertex i with every edge column repeated calE times
/// (variable c*|E| + e is copy c of edge e). F~ substitutes y^tilde_exponent
/// for x in a single copy of each f_i.
struct LinearFormProduct {
  std::vector<std::vector<std::int64_t>> forms;
  std::size_t multiplicity = 1;
  std::size_t tilde_exponent = 1;
  BlockSpec spec;

  std::size_t variable_count() const { return forms.empty() ? 0 : forms.front().size(); }
  /// "(x1 + x2)^2 (-x1 + x3)^2", or the F~ form "(y1^2 + y2^2) (...)".
  std::string to_string(bool tilde = false) const;
};

LinearFormProduct permanent_polynomial(const OrientedGraph& g);

/// Dense table cap for coefficient_oracle: (r+1)^L entries.
inline constexpr std::size_t kCoefficientTableCap = std::size_t{1} << 24;
/// Brute-force cap for point_count: p^L points.
inline constexpr std::uint64_t kPointCountCap = 100'000'000;
/// reconcile() uses Ryser for the permanent side only up to this dimension.
inline constexpr std::uint64_t kReconcileDirectDim = 20;

/// r!^L [(y_1...y_L)^{p-1}] F~^{p-1} mod p with p = r calV + 1.
Residue coefficient_oracle(const OrientedGraph& g, std::uint64_t p, std::size_t cap = kCoefficientTableCap);

/// [(y_1...y_L)^{p-1}] F~^{p-1} mod p, without the r!^L factor.
Residue tilde_coefficient(const OrientedGraph& g, std::uint64_t p, std::size_t cap = kCoefficientTableCap);

/// r!^n [(x_1...x_n)^r] F_A^r exactly, for a square integer matrix A.
BigInt extension_coefficient(const IntMatrix& a, unsigned r);

/// Number of zeros of F~ over F_p^L; any prime p. threads = 0 uses hardware concurrency.
std::uint64_t point_count(const OrientedGraph& g, std::uint64_t p, unsigned threads = 0,
                          std::uint64_t cap = kPointCountCap);

struct ReconcileReport {
  std::uint64_t prime = 0;
  std::uint64_t r = 0;
  std::uint64_t lcm = 0;
  bool variate = false;
  bool phi4_ratio = false;

  Residue gperm = 0;
  std::optional<Residue> coefficient;   // tilde_coefficient
  std::optional<bool> coefficient_matches_gperm;
  std::optional<std::uint64_t> count;
  std::optional<Residue> count_mod_p;
  Residue r_factorial_power = 0;        // r!^L mod p

  /// t in {+1, -1} with coefficient == t * count mod p; 0 if both are 0 or neither sign works.
  int count_sign = 0;
  /// (-1)^{L+1}, the sign a direct Chevalley-Warning expansion predicts.
  int expected_count_sign = 0;
  /// +1 if |E| = 0 mod 4 else -1; only for phi4-ratio graphs.
  std::optional<int> stated_sign;
  std::optional<bool> stated_relation_holds;
  /// t with gperm == t * r!^L * count mod p. 0 at variate primes, when both sides
  /// vanish, or when neither sign works.
  int empirical_sign = 0;
  /// gperm == +-r!^L * count for some sign.
  bool holds_up_to_sign = false;
  std::vector<std::string> notes;
};

ReconcileReport reconcile(const OrientedGraph& g, std::uint64_t p, unsigned threads = 0);

/// The single sign consistent with every report's empirical_sign (fixed primes only,
/// ignoring undetermined ones), or nullopt when reports disagree or none decide.
std::optional<int> global_empirical_sign(const std::vector<ReconcileReport>& reports);

}  // namespace egp
