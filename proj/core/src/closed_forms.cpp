#include "egp/closed_forms.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace egp {

namespace {

std::uint64_t half_index(std::uint64_t p, const char* what) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
  if (p == 2) throw std::invalid_argument(std::string(what) + ": needs an odd prime");
  return (p - 1) / 2;
}

}  // namespace

Residue closed_form_tree(std::uint64_t vertex_count, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("closed_form_tree: " + std::to_string(p) + " is not prime");
  if (vertex_count == 0) throw std::invalid_argument("closed_form_tree: empty tree");
  return Modulus(p).sign(static_cast<std::int64_t>(vertex_count - 1));
}

Residue closed_form_wheel(std::uint64_t w, std::uint64_t p) {
  if (w < 3) throw std::invalid_argument("closed_form_wheel: need w >= 3");
  const std::uint64_t n = half_index(p, "closed_form_wheel");
  FactorialTable t(p, n);
  const Modulus& mod = t.mod();
  Residue sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    Residue term = mod.pow(t.binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)), w);
    if ((k * w) % 2 == 1) term = mod.neg(term);
    sum = mod.add(sum, term);
  }
  return mod.mul(mod.sign(static_cast<std::int64_t>(w)), sum);
}

Residue closed_form_zigzag(std::uint64_t m, std::uint64_t p) {
  if (m < 4) throw std::invalid_argument("closed_form_zigzag: need m >= 4");
  const std::uint64_t n = half_index(p, "closed_form_zigzag");
  FactorialTable t(p, n);
  const Modulus& mod = t.mod();
  const std::size_t parts = m - 1;
  const auto sn = static_cast<std::int64_t>(n);
  std::vector<std::int64_t> k(parts, 0);
  Residue sum = 0;
  // Enumerate compositions of n into `parts` nonnegative parts.
  auto walk = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == parts) {
      k[i] = left;
      Residue term = 1;
      for (std::size_t a = 0; a < parts && term != 0; ++a) term = mod.mul(term, t.binom(sn, k[a]));
      std::int64_t prefix = 0;
      for (std::size_t a = 0; a + 3 < m && term != 0; ++a) {
        prefix += k[a];
        term = mod.mul(term, t.binom(sn - k[a + 1], prefix));
      }
      sum = mod.add(sum, term);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      k[i] = x;
      self(self, i + 1, left - x);
    }
  };
  walk(walk, 0, sn);
  return mod.mul(mod.sign(static_cast<std::int64_t>(m - 1)), sum);
}

}  // namespace egp
