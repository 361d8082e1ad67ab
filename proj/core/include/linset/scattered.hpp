#pragma once

/**
 * The psi family over GF(q^{2t}):
 *
 *   alpha(x) = Tr_{q^n/q^t}(x)^{q^{t-1}} / 2,   beta(x) = (x - x^{q^t})^q / 2,
 *   psi = alpha + beta,
 *   psi^(k) = (x^{q^k} + x^{q^{t-k}} - x^{q^{t+k}} + x^{q^{2t-k}}) / 2   (exponents mod 2t),
 *
 * together with two independent scatteredness checkers (fiber counting and
 * kernel ranks), witness searches for the non-scattered cases, and the
 * Baer-subline partition check.
 */

#include "linset/field.hpp"
#include "linset/linpoly.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace linset {

Felt alpha(const FieldCtx& F, Felt x);
Felt beta(const FieldCtx& F, Felt x);
/// alpha^(k)(x) = alpha(x)^{q^{(k-1)(t-1)}} and beta^(k)(x) = beta(x)^{q^{k-1}}, k >= 1.
Felt alpha_iterate(const FieldCtx& F, Felt x, unsigned k);
Felt beta_iterate(const FieldCtx& F, Felt x, unsigned k);

LinPoly alpha_poly(const FieldCtx& F);
LinPoly beta_poly(const FieldCtx& F);

struct PsiFamily {
  const FieldCtx* ctx;
  unsigned t;
  unsigned k;
  LinPoly poly;
};

/// psi^(k) from the closed form; 1 <= k < n, otherwise BadK.
PsiFamily build_psi(const FieldCtx& F, unsigned k);

/// (t even and gcd(k, t) = 1) or (t odd, gcd(k, 2t) = 1 and q = 1 mod 4).
bool theorem_predicate(std::uint64_t q, unsigned t, unsigned k);

enum class ScatterCriterion { Fibers, Ranks };

struct ScatterVerdict {
  bool scattered = false;
  /// GF(q)-independent y, z with f(y)/y = f(z)/z; present iff !scattered.
  std::optional<std::pair<Felt, Felt>> witness;
  ScatterCriterion criterion = ScatterCriterion::Fibers;
  /// Number of distinct values of f(x)/x (fiber checker only).
  std::uint64_t distinct_values = 0;
};

/// Scattered iff f(x)/x takes exactly (q^n - 1)/(q - 1) values on GF(q^n)^*.
ScatterVerdict is_scattered_fibers(const LinPoly& f, unsigned workers = 1);
/// Scattered iff kernel_dim(f + m*id) <= 1 for every m in GF(q^n).
ScatterVerdict is_scattered_ranks(const LinPoly& f, unsigned workers = 1);

/// True iff y, z are nonzero, GF(q)-independent and f(y)/y = f(z)/z.
bool verify_fiber_witness(const LinPoly& f, Felt y, Felt z);

struct RhoWitness {
  Felt rho;
  Felt x;
};

/// First (rho, x), x swept in generator-power order, with x != 0,
/// rho not in GF(q) and f(rho x) = rho f(x).
std::optional<RhoWitness> nonscattered_witness_search(const LinPoly& f);
/// First rho not in GF(q) with f(rho x) = rho f(x) for the given x.
std::optional<Felt> rho_for_point(const LinPoly& f, Felt x);
bool verify_rho_witness(const LinPoly& f, const RhoWitness& w);

struct BaerReport {
  std::uint64_t intersection = 0;       // |Sigma cap L|
  std::uint64_t fixed_part = 0;         // |{<(h, h^{q^{t-k}})> : h in GF(q^t)^*}|
  std::uint64_t w_part = 0;             // |{<(r, r^{q^k})> : r in W^*}|
  std::uint64_t expected_part = 0;      // (q^t - 1)/(q - 1)
  bool parts_disjoint = false;
  bool parts_inside_linear_set = false;
  bool union_equals_intersection = false;

  bool ok() const {
    return parts_disjoint && parts_inside_linear_set && union_equals_intersection &&
           fixed_part == expected_part && w_part == expected_part &&
           intersection == fixed_part + w_part;
  }
};

/// Requires 1 <= k < t (BadK) and psi^(k) scattered (NotScattered).
BaerReport baer_partition_check(const PsiFamily& psi);

}  // namespace linset
