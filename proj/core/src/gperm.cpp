#include "egp/gperm.hpp"

#include "egp/block.hpp"
#include "egp/ryser.hpp"

namespace egp {

std::optional<std::uint64_t> prime_index(const BlockSpec& spec, std::uint64_t p) {
  if (!is_prime(p) || p < 2 || (p - 1) % spec.row_copies != 0) return std::nullopt;
  const std::uint64_t n = (p - 1) / spec.row_copies;
  if (n == 0) return std::nullopt;
  return n;
}

std::uint64_t require_prime_index(const BlockSpec& spec, std::uint64_t p) {
  auto n = prime_index(spec, p);
  if (!n) {
    throw NotAdmissible(std::to_string(p) + " is not an admissible prime (need p = n*" +
                        std::to_string(spec.row_copies) + "+1 prime)");
  }
  return *n;
}

bool is_variate(const BlockSpec& spec, std::uint64_t n) { return (n * spec.column_copies) % 2 == 1; }

Residue gperm_direct(const OrientedGraph& g, std::uint64_t p) {
  const BlockSpec spec = block_spec(g);
  const std::uint64_t n = require_prime_index(spec, p);
  const std::size_t dim = n * spec.lcm;
  const std::size_t cap = ryser_cap();
  if (dim > cap) throw CapExceeded("Ryser dimension cap (EGP_RYSER_CAP)", cap, dim);
  const IntMatrix m = reduced_incidence(g).matrix.tile(n * spec.row_copies, n * spec.column_copies);
  return perm_mod(m, p);
}

Residue gperm_reduced(const OrientedGraph& g, std::uint64_t p) {
  const BlockSpec spec = block_spec(g);
  const std::uint64_t n = require_prime_index(spec, p);
  const std::uint64_t nv = n * spec.row_copies;
  const std::uint64_t ne = n * spec.column_copies;
  const BlockMatrix bm{reduced_incidence(g).matrix, nv, ne};
  const RowReduction red = blockwise_row_reduce(bm, p);
  const std::size_t r = red.rank;
  const std::size_t c = red.matrix.base.cols();

  FactorialTable table(p, nv);
  const Modulus& mod = table.mod();
  const Residue head = mod.pow(table.falling(static_cast<std::int64_t>(nv), static_cast<std::int64_t>(ne)), r);
  if (head == 0) return 0;

  IntMatrix a(r, c - r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = r; j < c; ++j) a(i, j - r) = red.matrix.base(i, j);
  const Residue tail = perm_block_mod(BlockMatrix{std::move(a), nv - ne, ne}, table);
  return mod.mul(head, tail);
}

Residue gperm_cofactor(const OrientedGraph& g, std::uint64_t p, EliminationOrder order) {
  const BlockSpec spec = block_spec(g);
  const std::uint64_t n = require_prime_index(spec, p);
  return cofactor_calculus(state_from_graph(g, n * spec.row_copies, n * spec.column_copies, p), order);
}

}  // namespace egp
