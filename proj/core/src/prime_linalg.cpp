#include "linset/prime_linalg.hpp"

#include <algorithm>
#include <utility>

namespace linset {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::size_t rref(PrimeMatrix& m, std::vector<std::size_t>* pivots) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::uint64_t p = m.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    const std::uint64_t inv = inv_mod(m(r, c), m.p());
    for (std::size_t j = c; j < cols; ++j) m(r, j) = static_cast<std::uint32_t>(m(r, j) * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint64_t f = p - m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        m(i, j) = static_cast<std::uint32_t>((m(i, j) + f * m(r, j)) % p);
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  PrimeMatrix out(r, cols, m.p());
  for (std::size_t i = 0; i < r; ++i) std::copy(m.row(i).begin(), m.row(i).end(), out.row(i).begin());
  m = std::move(out);
  return r;
}

std::size_t rank(PrimeMatrix m) { return rref(m); }

PrimeMatrix nullspace(const PrimeMatrix& m) {
  PrimeMatrix a = m;
  std::vector<std::size_t> pivots;
  const std::size_t rk = rref(a, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  PrimeMatrix basis(m.cols() - rk, m.cols(), m.p());
  std::size_t b = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(b, free) = 1;
    for (std::size_t i = 0; i < rk; ++i) basis(b, pivots[i]) = (m.p() - a(i, free)) % m.p();
    ++b;
  }
  rref(basis);
  return basis;
}

}  // namespace linset
