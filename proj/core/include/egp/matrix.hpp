#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace egp {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("IntMatrix: data size mismatch");
  }
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix ones(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols, 1); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<std::int64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  IntMatrix transpose() const;
  /// Columns reordered so that column i of the result is column order[i] of this.
  IntMatrix permute_columns(std::span<const std::size_t> order) const;
  /// Kronecker product 1_{row_reps x col_reps} (x) this.
  IntMatrix tile(std::size_t row_reps, std::size_t col_reps) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Debug text format: one row per line, space separated.
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Integer determinant by fraction-free elimination (Bareiss). Small matrices only.
std::int64_t determinant(const IntMatrix& m);

}  // namespace egp
