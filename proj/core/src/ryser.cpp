#include "egp/ryser.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace egp {

std::size_t ryser_cap() {
  if (const char* env = std::getenv("EGP_RYSER_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 63) return static_cast<std::size_t>(v);
  }
  return kDefaultRyserCap;
}

namespace {

void check_square(const IntMatrix& m) {
  if (!m.square()) {
    throw std::invalid_argument("permanent of a non-square " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
  }
}

// Ryser: perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, walked in
// Gray-code order so each step adds or removes one column.
template <class Acc, class Add, class Mul>
Acc ryser_walk(const IntMatrix& m, Acc zero, Add add_col, Mul row_product) {
  const std::size_t n = m.rows();
  std::vector<Acc> sums(n, zero);
  Acc total = zero;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t gray_prev = 0;
  for (std::uint64_t k = 1; k < count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ gray_prev;
    const auto j = static_cast<std::size_t>(std::countr_zero(diff));
    const bool added = (gray & diff) != 0;
    for (std::size_t i = 0; i < n; ++i) add_col(sums[i], m(i, j), added);
    gray_prev = gray;
    const Acc prod = row_product(sums);
    const bool odd = (std::popcount(gray) & 1) != 0;
    if (odd == ((n & 1U) != 0)) {
      total = total + prod;
    } else {
      total = total - prod;
    }
  }
  return total;
}

}  // namespace

BigInt perm_exact(const IntMatrix& m) {
  check_square(m);
  const std::size_t n = m.rows();
  if (n > kExactPermanentCap) throw CapExceeded("exact permanent dimension cap", kExactPermanentCap, n);
  if (n == 0) return 1;

  double bits = static_cast<double>(n) + 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += std::abs(m(i, j));
    if (s == 0) return 0;
    bits += std::log2(static_cast<double>(s));
  }

  if (bits < 126.0) {
    using I = __int128;
    const I r = ryser_walk<I>(
        m, I{0},
        [](I& s, std::int64_t v, bool add) { s += add ? v : -v; },
        [](const std::vector<I>& sums) {
          I p = 1;
          for (const I& s : sums) {
            p *= s;
            if (p == 0) break;
          }
          return p;
        });
    // cpp_int has no direct __int128 constructor on every platform; go through two halves.
    const bool neg = r < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-r) : static_cast<unsigned __int128>(r);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-out) : out;
  }

  return ryser_walk<BigInt>(
      m, BigInt{0},
      [](BigInt& s, std::int64_t v, bool add) {
        if (add) {
          s += v;
        } else {
          s -= v;
        }
      },
      [](const std::vector<BigInt>& sums) {
        BigInt p = 1;
        for (const BigInt& s : sums) {
          p *= s;
          if (p == 0) break;
        }
        return p;
      });
}

Residue perm_mod(const IntMatrix& m, std::uint64_t modulus) {
  check_square(m);
  const Modulus mod(modulus);
  const std::size_t n = m.rows();
  const std::size_t cap = ryser_cap();
  if (n > cap) throw CapExceeded("Ryser dimension cap (EGP_RYSER_CAP)", cap, n);
  if (n == 0) return 1 % modulus;

  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = static_cast<std::int64_t>(mod.reduce(m(i, j)));

  std::vector<Residue> sums(n, 0);
  Residue total = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t gray_prev = 0;
  for (std::uint64_t k = 1; k < count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ gray_prev;
    const auto j = static_cast<std::size_t>(std::countr_zero(diff));
    const bool added = (gray & diff) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<Residue>(r(i, j));
      sums[i] = added ? mod.add(sums[i], v) : mod.sub(sums[i], v);
    }
    gray_prev = gray;
    Residue prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod = mod.mul(prod, sums[i]);
    const bool odd = (std::popcount(gray) & 1) != 0;
    total = (odd == ((n & 1U) != 0)) ? mod.add(total, prod) : mod.sub(total, prod);
  }
  return total;
}

}  // namespace egp
