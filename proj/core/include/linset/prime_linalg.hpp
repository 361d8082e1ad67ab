#pragma once

// Dense linear algebra over the prime field GF(p). Backs the exact
// idealiser and equivalence solvers, which linearize GF(q)-linear conditions
// in GF(p) coordinates.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace linset {

class PrimeMatrix {
 public:
  PrimeMatrix() = default;
  PrimeMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t p() const { return p_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const PrimeMatrix&, const PrimeMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> data_;
};

/// Reduced echelon form in place (zero rows dropped); returns the rank and
/// fills `pivots` with the pivot columns when given.
std::size_t rref(PrimeMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(PrimeMatrix m);

/// Reduced echelon basis (rows) of { v : m v = 0 }.
PrimeMatrix nullspace(const PrimeMatrix& m);

}  // namespace linset
