#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace egp {

using Residue = std::uint64_t;

/// Arithmetic in Z/mZ for moduli below 2^31. Most callers use a prime
/// modulus; composite moduli are allowed for the vanishing checks.
class Modulus {
 public:
  explicit Modulus(std::uint64_t m) : m_(m) {
    if (m < 2 || m >= (std::uint64_t{1} << 31)) {
      throw std::invalid_argument("modulus must be in [2, 2^31)");
    }
  }

  std::uint64_t value() const { return m_; }

  Residue reduce(std::int64_t x) const {
    auto r = x % static_cast<std::int64_t>(m_);
    return static_cast<Residue>(r < 0 ? r + static_cast<std::int64_t>(m_) : r);
  }
  Residue add(Residue a, Residue b) const { return (a + b) % m_; }
  Residue sub(Residue a, Residue b) const { return (a + m_ - b) % m_; }
  Residue mul(Residue a, Residue b) const { return (a * b) % m_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : m_ - a; }
  Residue pow(Residue base, std::uint64_t e) const;
  /// Inverse via Fermat; only valid for prime moduli and nonzero a.
  Residue inv(Residue a) const;
  /// (-1)^e as a residue.
  Residue sign(std::int64_t e) const { return (e % 2 == 0) ? 1 % m_ : m_ - 1; }

 private:
  std::uint64_t m_;
};

/// Factorials and inverse factorials modulo a prime, 0! .. limit!.
/// Binomials with arguments beyond the table fall back to Lucas' theorem.
class FactorialTable {
 public:
  FactorialTable(std::uint64_t prime, std::uint64_t limit);

  const Modulus& mod() const { return mod_; }
  std::uint64_t prime() const { return mod_.value(); }

  /// n! mod p (zero once n >= p).
  Residue fact(std::uint64_t n) const;
  /// Inverse of n! for n < p.
  Residue inv_fact(std::uint64_t n) const;
  /// C(n, k) mod p. Negative or out-of-range arguments give 0.
  Residue binom(std::int64_t n, std::int64_t k) const;
  /// n (n-1) ... (n-k+1) mod p; zero when k > n.
  Residue falling(std::int64_t n, std::int64_t k) const;

 private:
  Residue small_binom(std::uint64_t n, std::uint64_t k) const;

  Modulus mod_;
  std::vector<Residue> fact_;
  std::vector<Residue> inv_fact_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// (m-1)! mod m, computed directly (Wilson: -1 exactly when m is prime).
Residue wilson_factorial(std::uint64_t m);

}  // namespace egp
