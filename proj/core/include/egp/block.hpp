#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "egp/matrix.hpp"
#include "egp/modarith.hpp"
#include "egp/ryser.hpp"

namespace egp {

/// 1_{row_reps x col_reps} (x) base, kept unmaterialized.
struct BlockMatrix {
  IntMatrix base;
  std::size_t row_reps = 1;
  std::size_t col_reps = 1;

  std::size_t rows() const { return base.rows() * row_reps; }
  std::size_t cols() const { return base.cols() * col_reps; }
  bool square() const { return rows() == cols(); }
  IntMatrix materialize() const { return base.tile(row_reps, col_reps); }
};

class RankDeficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RowReduction {
  BlockMatrix matrix;                     // base is [I_r | A]
  std::vector<std::size_t> column_order;  // column i of the result is column column_order[i] of the input
  std::size_t rank = 0;
};

/// Row reduces the base over F_p into [I_r | A] form, moving pivot columns to the
/// front (pivots taken greedily left to right). Entries of A are returned in the
/// symmetric range (-p/2, p/2]. On a totally unimodular base only +-1 pivots occur.
/// Throws RankDeficient when the base lacks full row rank mod p.
RowReduction blockwise_row_reduce(const BlockMatrix& bm, std::uint64_t p);

/// Permanent mod p of the matrix in which row i of `base` is repeated
/// row_mult[i] times and column j is repeated col_mult[j] times. Evaluated as
///   prod_i row_mult[i]! * sum_K prod_j multinomial(col_mult[j]; k_.j) prod_i b_ij^k_ij
/// over nonnegative K with row sums row_mult and column sums col_mult, using a
/// column-by-column dynamic program whose state holds only the active rows.
Residue perm_multiset_mod(const IntMatrix& base, const std::vector<std::uint64_t>& row_mult,
                          const std::vector<std::uint64_t>& col_mult, const FactorialTable& table);

/// Exact integer version of perm_multiset_mod, for composite moduli. The state
/// is the full vector of remaining row sums, so keep the base small.
BigInt perm_multiset_exact(const IntMatrix& base, const std::vector<std::uint64_t>& row_mult,
                           const std::vector<std::uint64_t>& col_mult);
BigInt perm_block_exact(const BlockMatrix& bm);

/// Perm(1_{row_reps x col_reps} (x) base) mod p via perm_multiset_mod, merging
/// identical rows and columns of the base first.
Residue perm_block_mod(const BlockMatrix& bm, const FactorialTable& table);

}  // namespace egp
