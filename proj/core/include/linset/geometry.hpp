#pragma once

/**
 * Subspaces of PG(n-1, q^n), the canonical subgeometry
 * Sigma = {<(u, u^q, ..., u^{q^{n-1}})>}, and the collineation
 *
 *   sigma: <(x_0, ..., x_{n-1})> -> <(x_{n-1}^q, x_0^q, ..., x_{n-2}^q)>
 *
 * which fixes Sigma pointwise. A hyperplane a.x = 0 is mapped by sigma to the
 * hyperplane whose coefficient vector transforms the same way, so sigma acts
 * on bases and on equations with one routine.
 */

#include "linset/field.hpp"
#include "linset/linear_set.hpp"
#include "linset/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace linset {

/// Stores both the reduced echelon basis and the reduced echelon equation
/// system; each determines the other.
class ProjSubspace {
 public:
  static ProjSubspace from_basis(const FieldCtx& F, const FeltMatrix& vectors);
  static ProjSubspace from_equations(const FieldCtx& F, const FeltMatrix& equations);

  const FieldCtx& field() const { return *ctx_; }
  std::size_t ambient() const { return ctx_->n(); }
  const FeltMatrix& basis() const { return basis_; }
  const FeltMatrix& equations() const { return equations_; }
  /// Projective dimension; -1 for the empty subspace.
  int dim() const { return static_cast<int>(basis_.rows()) - 1; }
  bool contains(std::span<const Felt> v) const;

  friend bool operator==(const ProjSubspace& a, const ProjSubspace& b) { return a.basis_ == b.basis_; }

 private:
  ProjSubspace(const FieldCtx& F, FeltMatrix basis, FeltMatrix equations)
      : ctx_(&F), basis_(std::move(basis)), equations_(std::move(equations)) {}

  const FieldCtx* ctx_;
  FeltMatrix basis_;
  FeltMatrix equations_;
};

/// Gamma_k: x_0 = 0 and x_k + x_{t-k} - x_{t+k} + x_{n-k} = 0 (indices mod n).
/// Requires gcd(k, n) = 1 (BadK).
ProjSubspace gamma_k(const FieldCtx& F, unsigned k);

/// sigma^m applied to a vector: y_i = x_{i-m}^{q^m}.
std::vector<Felt> sigma_vector(const FieldCtx& F, std::span<const Felt> x, std::int64_t m);
ProjSubspace apply_sigma(const ProjSubspace& S, std::int64_t m);

ProjSubspace intersect(const ProjSubspace& a, const ProjSubspace& b);
ProjSubspace join(const ProjSubspace& a, const ProjSubspace& b);

/// P_u = (u, u^q, ..., u^{q^{n-1}}).
std::vector<Felt> subgeometry_point(const FieldCtx& F, Felt u);

/// True iff no P_u (u != 0) lies in S. Exhaustive over GF(q^n)^*.
bool disjoint_from_subgeometry(const ProjSubspace& S);

/// Least j >= 1 with dim(S cap S^{sigma^m} cap ... cap S^{sigma^{mj}}) > n - 3 - 2j.
/// Throws NotDisjointFromSigma if S meets Sigma.
unsigned intn(const ProjSubspace& S, std::int64_t m);

/// Dimensions of S cap S^{sigma^m} cap ... cap S^{sigma^{mj}} for j = 0..depth.
std::vector<int> sigma_chain_dims(const ProjSubspace& S, std::int64_t m, unsigned depth);

/// <Gamma, P_u> cap line for every u != 0, with line = <e_0, e_{n-k}>, read
/// off in the coordinates (x_0, x_{n-k}). Sorted, duplicate free.
PointSet project_to_line(const ProjSubspace& gamma, unsigned k, unsigned workers = 1);

/// <Gamma, P> cap line, or nullopt if it is not a single point.
std::optional<std::vector<Felt>> project_point(const ProjSubspace& gamma, std::span<const Felt> point,
                                               const ProjSubspace& line);

/// True iff dim(Gamma cap Gamma^{sigma^m}) = n - 4 for some m coprime to n.
bool pseudoregulus_geometric_test(const ProjSubspace& gamma);

/// <P, P^{sigma^m}, ..., P^{sigma^{m(n-3)}}>.
ProjSubspace pseudoregulus_vertex(const FieldCtx& F, std::span<const Felt> point, std::int64_t m);

}  // namespace linset
