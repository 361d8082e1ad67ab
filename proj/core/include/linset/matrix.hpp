#pragma once

// Dense matrices over GF(q^n) and exact Gaussian elimination.

#include "linset/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace linset {

class FeltMatrix {
 public:
  FeltMatrix() = default;
  FeltMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Felt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Felt operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Felt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Felt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Felt> r);
  FeltMatrix transposed() const;

  std::span<Felt> data() { return data_; }
  std::span<const Felt> data() const { return data_; }

  friend bool operator==(const FeltMatrix&, const FeltMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Felt> data_;
};

/// Row-reduces `m` to reduced echelon form in place, returns the rank.
/// Zero rows are dropped afterwards, so m.rows() == rank on return.
std::size_t rref(const FieldCtx& F, FeltMatrix& m);

std::size_t rank(const FieldCtx& F, FeltMatrix m);

/// Rank of a row-major rows x cols block, destroyed in the process.
/// Allocation-free; used by the exhaustive sweeps.
std::size_t rank_in_place(const FieldCtx& F, std::span<Felt> a, std::size_t rows, std::size_t cols);

/// Basis (as rows, reduced echelon) of { v : m v = 0 }.
FeltMatrix nullspace(const FieldCtx& F, const FeltMatrix& m);

Felt determinant(const FieldCtx& F, FeltMatrix m);

}  // namespace linset
