#include "egp/modarith.hpp"

#include <numeric>

namespace egp {

Residue Modulus::pow(Residue base, std::uint64_t e) const {
  Residue result = 1 % m_;
  base %= m_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Residue Modulus::inv(Residue a) const {
  if (a % m_ == 0) throw std::domain_error("zero has no inverse");
  return pow(a, m_ - 2);
}

FactorialTable::FactorialTable(std::uint64_t prime, std::uint64_t limit) : mod_(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("FactorialTable needs a prime modulus");
  // Beyond p-1 every factorial vanishes, so the table never needs to grow past it.
  const std::uint64_t top = std::min(limit, prime - 1);
  fact_.resize(top + 1);
  inv_fact_.resize(top + 1);
  fact_[0] = 1;
  for (std::uint64_t i = 1; i <= top; ++i) fact_[i] = mod_.mul(fact_[i - 1], i);
  inv_fact_[top] = mod_.inv(fact_[top]);
  for (std::uint64_t i = top; i > 0; --i) inv_fact_[i - 1] = mod_.mul(inv_fact_[i], i);
}

Residue FactorialTable::fact(std::uint64_t n) const {
  if (n >= prime()) return 0;
  if (n < fact_.size()) return fact_[n];
  Residue acc = fact_.back();
  for (std::uint64_t i = fact_.size(); i <= n; ++i) acc = mod_.mul(acc, i);
  return acc;
}

Residue FactorialTable::inv_fact(std::uint64_t n) const {
  if (n >= prime()) throw std::domain_error("factorial not invertible mod p");
  if (n < inv_fact_.size()) return inv_fact_[n];
  return mod_.inv(fact(n));
}

Residue FactorialTable::small_binom(std::uint64_t n, std::uint64_t k) const {
  if (k > n) return 0;
  return mod_.mul(fact(n), mod_.mul(inv_fact(k), inv_fact(n - k)));
}

Residue FactorialTable::binom(std::int64_t n, std::int64_t k) const {
  if (n < 0 || k < 0 || k > n) return 0;
  auto un = static_cast<std::uint64_t>(n);
  auto uk = static_cast<std::uint64_t>(k);
  const std::uint64_t p = prime();
  Residue result = 1;
  while (un > 0 || uk > 0) {
    result = mod_.mul(result, small_binom(un % p, uk % p));
    if (result == 0) return 0;
    un /= p;
    uk /= p;
  }
  return result;
}

Residue FactorialTable::falling(std::int64_t n, std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("negative falling factorial length");
  if (k > n) return 0;
  Residue acc = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    acc = mod_.mul(acc, mod_.reduce(n - i));
    if (acc == 0) break;
  }
  return acc;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

Residue wilson_factorial(std::uint64_t m) {
  Modulus mod(m);
  Residue acc = 1 % m;
  for (std::uint64_t i = 2; i < m; ++i) acc = mod.mul(acc, i);
  return acc;
}

}  // namespace egp
