#include "linset/matrix.hpp"

#include "linset/error.hpp"

#include <algorithm>
#include <utility>

namespace linset {

void FeltMatrix::append_row(std::span<const Felt> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(Errc::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

FeltMatrix FeltMatrix::transposed() const {
  FeltMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

namespace {

// Shared elimination kernel; returns the rank and records pivot columns.
std::size_t eliminate(const FieldCtx& F, Felt* a, std::size_t rows, std::size_t cols, bool reduce,
                      std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    }
    const Felt inv = F.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = F.mul(a[r * cols + j], inv);
    for (std::size_t i = reduce ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      const Felt f = a[i * cols + c];
      if (f.is_zero()) continue;
      const Felt nf = F.neg(f);
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = F.add(a[i * cols + j], F.mul(nf, a[r * cols + j]));
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rref(const FieldCtx& F, FeltMatrix& m) {
  const std::size_t rk = eliminate(F, m.data().data(), m.rows(), m.cols(), true, nullptr);
  FeltMatrix out(rk, m.cols());
  for (std::size_t r = 0; r < rk; ++r) std::copy(m.row(r).begin(), m.row(r).end(), out.row(r).begin());
  m = std::move(out);
  return rk;
}

std::size_t rank(const FieldCtx& F, FeltMatrix m) {
  return eliminate(F, m.data().data(), m.rows(), m.cols(), false, nullptr);
}

std::size_t rank_in_place(const FieldCtx& F, std::span<Felt> a, std::size_t rows, std::size_t cols) {
  return eliminate(F, a.data(), rows, cols, false, nullptr);
}

FeltMatrix nullspace(const FieldCtx& F, const FeltMatrix& m) {
  FeltMatrix a = m;
  std::vector<std::size_t> pivots;
  const std::size_t rk = eliminate(F, a.data().data(), a.rows(), a.cols(), true, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  FeltMatrix basis(m.cols() - rk, m.cols());
  std::size_t b = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(b, free) = F.one();
    for (std::size_t i = 0; i < rk; ++i) basis(b, pivots[i]) = F.neg(a(i, free));
    ++b;
  }
  rref(F, basis);
  return basis;
}

Felt determinant(const FieldCtx& F, FeltMatrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Felt det = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(c, c));
    const Felt inv = F.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Felt f = F.mul(m(i, c), inv);
      if (f.is_zero()) continue;
      const Felt nf = F.neg(f);
      for (std::size_t j = c; j < n; ++j) m(i, j) = F.add(m(i, j), F.mul(nf, m(c, j)));
    }
  }
  return det;
}

}  // namespace linset
