#pragma once

/**
 * q-polynomials f(x) = sum_{i<n} c_i x^{q^i} over GF(q^n), viewed as
 * GF(q)-linear endomorphisms of GF(q^n) (reduced modulo x^{q^n} - x).
 *
 * A LinPoly refers to its FieldCtx by pointer; the context must outlive it.
 */

#include "linset/field.hpp"
#include "linset/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace linset {

class LinPoly {
 public:
  /// The zero map.
  explicit LinPoly(const FieldCtx& F);
  /// `coeffs[i]` is the coefficient of x^{q^i}; exactly n entries.
  LinPoly(const FieldCtx& F, std::vector<Felt> coeffs);

  static LinPoly identity(const FieldCtx& F);
  /// c * x^{q^i}, i taken modulo n.
  static LinPoly monomial(const FieldCtx& F, std::int64_t i, Felt c);

  const FieldCtx& field() const { return *ctx_; }
  std::size_t size() const { return coeffs_.size(); }
  Felt operator[](std::size_t i) const { return coeffs_[i]; }
  void set(std::size_t i, Felt c) { coeffs_[i] = c; }
  std::span<const Felt> coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const LinPoly& a, const LinPoly& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

 private:
  const FieldCtx* ctx_;
  std::vector<Felt> coeffs_;
};

LinPoly add(const LinPoly& f, const LinPoly& g);
LinPoly sub(const LinPoly& f, const LinPoly& g);
/// The map x -> lambda * f(x).
LinPoly scale(Felt lambda, const LinPoly& f);
/// Coefficients raised to p^j: conjugation of f by the automorphism x -> x^{p^j}.
LinPoly twist(const LinPoly& f, std::int64_t j);

Felt eval(const LinPoly& f, Felt x);

/// f o g, i.e. x -> f(g(x)). Throws CtxMismatch for different fields.
LinPoly compose(const LinPoly& f, const LinPoly& g);
/// k-fold composition f o ... o f; k = 0 gives the identity.
LinPoly compose_power(const LinPoly& f, std::uint64_t k);

/// Adjoint with respect to (x, y) -> Tr_{q^n/q}(xy).
LinPoly adjoint(const LinPoly& f);

/// n x n matrix with entry (i, j) = c_{j-i mod n}^{q^i}.
FeltMatrix dickson(const LinPoly& f);

/// Rank of f as a GF(q)-linear map, from the Dickson matrix.
std::size_t rank(const LinPoly& f);
std::size_t kernel_dim(const LinPoly& f);

/// Least m >= 1 with f^(m) = id, or nullopt when f is not invertible.
std::optional<std::uint64_t> map_order(const LinPoly& f);

/// Fiber sizes of x -> f(x)/x on GF(q^n)^*: histogram[size] = number of values
/// attained by exactly `size` nonzero x. Zero is an ordinary value.
using FiberHistogram = std::map<std::uint64_t, std::uint64_t>;
FiberHistogram fiber_histogram(const LinPoly& f, unsigned workers = 1);

/// GF(p) coordinates of all coefficients, coefficient i occupying
/// out[i*degree .. (i+1)*degree).
void poly_coords(const LinPoly& f, std::span<std::uint32_t> out);
LinPoly poly_from_coords(const FieldCtx& F, std::span<const std::uint32_t> c);

/// f(x)/x for every nonzero x, in generator-power order (entry i is x = w^i).
std::vector<Felt> quotient_table(const LinPoly& f, unsigned workers = 1);

}  // namespace linset
