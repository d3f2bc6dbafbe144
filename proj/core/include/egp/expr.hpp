#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egp/modarith.hpp"
#include "egp/ryser.hpp"

namespace egp {

/// constant + n_coef * n + sum_i var_coef[i] * x_i
struct LinearForm {
  std::int64_t constant = 0;
  std::int64_t n_coef = 0;
  std::vector<std::int64_t> var_coef;

  std::int64_t evaluate(std::int64_t n, const std::vector<std::int64_t>& xs) const;
  /// Highest variable index with a nonzero coefficient, or -1.
  int last_variable() const;
};

struct BinomFactor {
  LinearForm top;
  LinearForm bottom;
  unsigned power = 1;
};

struct FactorialFactor {
  LinearForm arg;  // in n only
  int power = 1;   // may be negative
};

/// Nested binomial sum
///   (-1)^{outer_sign} prod fact(.)^k * sum_{x in [0, upper]^vars} (-1)^{inner_sign} prod C(top, bottom)^power
/// evaluated at the prime modulus_a * n + modulus_b.
struct BinomialSumExpr {
  std::string id;
  std::int64_t modulus_a = 2;
  std::int64_t modulus_b = 1;
  std::vector<std::string> vars;
  LinearForm upper;
  LinearForm inner_sign;
  std::vector<BinomFactor> binoms;
  std::vector<FactorialFactor> prefactor;
  LinearForm outer_sign;
};

inline constexpr std::size_t kExprVariableCap = 5;

/// Grammar (whitespace-insensitive, '#' comments):
///   EXPR <id> MOD <lin>
///     [SUM <var>... [TO <lin>] { [SIGN <lin>;] BINOM(<lin>,<lin>)[^k] * ... }]
///     PREFACTOR fact(<lin>)[^k] * ... [SIGN <lin>]
///   END
/// Linear forms look like "2n - x1 + 3"; the summation bound defaults to n.
std::vector<BinomialSumExpr> parse_expressions(std::string_view text);
std::vector<BinomialSumExpr> read_expression_file(const std::string& path);

/// n with p = modulus_a * n + modulus_b, if any.
std::optional<std::int64_t> expr_index(const BinomialSumExpr& e, std::uint64_t p);

/// Residue at prime p. Throws CapExceeded beyond kExprVariableCap variables.
Residue eval_expr(const BinomialSumExpr& e, std::uint64_t p);

/// Exact integer value at index n.
BigInt eval_expr_exact(const BinomialSumExpr& e, std::int64_t n);

}  // namespace egp
