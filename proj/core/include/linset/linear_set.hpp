#pragma once

/**
 * Linear sets of PG(1, q^n) defined by q-polynomials, the known families of
 * maximum scattered linear sets, and GL/GammaL equivalence of the defining
 * subspaces U_f = {(x, f(x))}.
 */

#include "linset/field.hpp"
#include "linset/linpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linset {

/// A point <(a, b)> of PG(1, q^n), normalized so the first nonzero entry is 1.
struct ProjPoint {
  Felt a;
  Felt b;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Normalizes (a, b); throws InvalidArgument on (0, 0).
ProjPoint make_point(const FieldCtx& F, Felt a, Felt b);

/// Sorted, duplicate free.
using PointSet = std::vector<ProjPoint>;

struct LinearSet {
  LinPoly poly;
  PointSet points;
};

LinearSet linear_set(const LinPoly& f, unsigned workers = 1);

enum class Family { U1, U2, U3, U4, U5 };

struct KnownFamily {
  Family tag = Family::U1;
  unsigned s = 1;
  Felt delta;  // U2, U3, U4
  Felt h;      // U5
};

std::string family_name(Family tag);

/// Validates the family constraints (BadParams naming the failed one) and
/// returns the defining polynomial:
///   U1: x^{q^s}                          gcd(s, n) = 1
///   U2: delta x^{q^s} + x^{q^{n-s}}      gcd(s, n) = 1, N_{q^n/q}(delta) not in {0, 1}
///   U3: delta x^{q^s} + x^{q^{s+n/2}}    n in {6, 8}, gcd(s, n/2) = 1, N_{q^n/q^{n/2}}(delta) not in {0, 1}
///   U4: x^q + x^{q^3} + delta x^{q^5}    n = 6, delta^2 + delta = 1
///   U5: h^{q-1} x^q - h^{q^2-1} x^{q^2} + x^{q^4} + x^{q^5}    n = 6, h^{q^3+1} = -1
LinPoly known_family(const FieldCtx& F, const KnownFamily& fam);

/// L_f subset of L_g, decided pointwise: for every x the q-polynomial
/// F(Y) = f(x) Y - x g(Y) must have a singular Dickson matrix.
bool inclusion_dickson(const LinPoly& f, const LinPoly& g);

/// Necessary coefficient identities for L_f = L_g:
///   a_0 = b_0,
///   a_k a_{n-k}^{q^k} = b_k b_{n-k}^{q^k}                                  (1 <= k < n),
///   a_1 a_{k-1}^q a_{n-k}^{q^k} + a_k a_{n-1}^q a_{n-k+1}^{q^k} = same in b  (2 <= k < n).
bool coefficient_filter(const LinPoly& f, const LinPoly& g);

/// (x, y) -> (a x + b y, c x + d y) after the field automorphism x -> x^{p^automorphism}.
struct Certificate {
  Felt a, b, c, d;
  unsigned automorphism = 0;
};

struct EquivalenceOptions {
  bool with_automorphisms = true;
  /// Maximum number of candidate matrices inspected over all automorphisms.
  std::uint64_t budget = 100'000'000;
};

/**
 * Searches for a matrix in GL(2, q^n) (optionally composed with a field
 * automorphism) mapping U_f onto U_g.
 *
 * The condition g(a x + b f(x)) = c x + d f(x) is linear over GF(p) in
 * (a, b, c, d); the solution space is computed exactly and its elements are
 * enumerated in a fixed order until one with a x + b f(x) invertible and
 * ad - bc != 0 appears. Automorphisms are tried in increasing exponent.
 * Returns nullopt only after an exhaustive search; throws BudgetExceeded
 * otherwise.
 */
std::optional<Certificate> subspace_equivalent(const LinPoly& f, const LinPoly& g,
                                               const EquivalenceOptions& opts = {});

/// Image of (x, f(x)) under the certificate, as a pair.
std::pair<Felt, Felt> apply_certificate(const FieldCtx& F, const Certificate& cert, Felt x, Felt fx);

/// Equivalent to some x^{q^s}, gcd(s, n) = 1.
bool pseudoregulus_test(const LinPoly& f, const EquivalenceOptions& opts = {});

/// Valid delta values for U2 (norm to GF(q)) or U3 (norm to GF(q^t)), in
/// generator-power order. All of them when q = 3 or when at most `samples`
/// exist; otherwise `samples` evenly spaced ones.
std::vector<Felt> delta_sweep(const FieldCtx& F, Family tag, std::uint64_t samples = 10'000);

/// Equivalent to U2(s, delta) for some s coprime to n, s < n/2, and delta in `deltas`.
/// Reports the first match.
struct LpMatch {
  unsigned s;
  Felt delta;
  Certificate cert;
};
std::optional<LpMatch> lp_type_test(const LinPoly& f, const std::vector<Felt>& deltas,
                                    const EquivalenceOptions& opts = {});

}  // namespace linset
