#pragma once

/**
 * Rank-metric codes C_f = {a f(x) + b x : a, b in GF(q^n)} of n x n matrices
 * over GF(q), with codewords kept as q-polynomials.
 */

#include "linset/field.hpp"
#include "linset/linear_set.hpp"
#include "linset/linpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace linset {

struct RankCode {
  LinPoly f;
  /// f is a GF(q^n)-multiple of the identity, so C_f collapses to {b x} and has q^n words.
  bool degenerate = false;
};

RankCode build_code(const LinPoly& f);

/// counts[r] = number of codewords of rank r, r = 0..n.
struct RankDistribution {
  std::vector<std::uint64_t> counts;
  std::uint64_t total() const;
};

/// Ranks of the representatives (0, 1) and (1, b), b in GF(q^n); each one stands
/// for its q^n - 1 nonzero GF(q^n)-multiples.
RankDistribution rank_distribution(const RankCode& C, unsigned workers = 1);
/// Least nonzero rank.
unsigned min_rank_distance(const RankCode& C, unsigned workers = 1);
unsigned min_rank_distance(const RankDistribution& dist);
/// |C| = q^{n(n - d + 1)}, i.e. d = n - 1 for a non-degenerate code.
bool is_mrd(const RankCode& C, unsigned workers = 1);
bool is_mrd(const RankCode& C, const RankDistribution& dist);

enum class Side { Left, Right };

struct IdealiserReport {
  Side side = Side::Left;
  /// GF(p)-basis of {phi : phi o C subset C} (left) or {phi : C o phi subset C} (right).
  std::vector<LinPoly> basis;
  unsigned dim_over_p = 0;
  unsigned dim_over_q = 0;
  bool contains_identity = false;
  bool closed = false;
  bool commutative = false;
  /// Set when p^dim is within the enumeration limit.
  std::optional<bool> nonzero_invertible;

  bool is_field() const {
    return contains_identity && closed && commutative && nonzero_invertible.value_or(false);
  }
};

/// Exact nullspace computation over GF(p). Invertibility of all nonzero
/// elements is checked by enumeration when p^dim <= enumeration_limit.
IdealiserReport idealiser(const RankCode& C, Side side, std::uint64_t enumeration_limit = 1'000'000);

/// The code generated by id and the adjoint of f.
RankCode adjoint_code(const RankCode& C);

/// Equivalence of C_f and C_g through the subspaces U_f and U_g.
std::optional<Certificate> code_equivalent(const RankCode& a, const RankCode& b,
                                           const EquivalenceOptions& opts = {});

struct NewCodes {
  std::vector<unsigned> ks;
  std::uint64_t count = 0;
};

/// {1 <= k < t : gcd(k, 2t) = 1}. Requires q odd, and q = 1 mod 4 when t is odd
/// (BadHypotheses).
NewCodes count_new_codes(std::uint64_t q, unsigned t);

}  // namespace linset
