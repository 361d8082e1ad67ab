#pragma once

// Slow, independent reference computations. Nothing here calls the Dickson,
// nullspace or search code of the library; only the basic field operations
// add, mul, pow and the coordinate maps are shared.

#include "linset/field.hpp"
#include "linset/linpoly.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using linset::Felt;
using linset::FieldCtx;
using linset::LinPoly;

// Schoolbook product of coordinate vectors reduced by the defining modulus.
inline Felt naive_mul(const FieldCtx& F, Felt a, Felt b) {
  const unsigned d = F.degree();
  const std::uint32_t p = F.p();
  std::vector<std::uint32_t> ca(d), cb(d), prod(2 * d, 0);
  F.coords(a, ca);
  F.coords(b, cb);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
  const auto& mod = F.spec().modulus;
  for (unsigned k = 2 * d - 1; k >= d; --k) {
    const std::uint32_t c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i <= d; ++i) {
      const std::uint64_t sub = std::uint64_t{c} * mod[i] % p;
      prod[k - d + i] = static_cast<std::uint32_t>((prod[k - d + i] + p - sub) % p);
    }
  }
  prod.resize(d);
  return F.from_coords(prod);
}

inline Felt qpow(const FieldCtx& F, Felt x, unsigned i) {
  std::uint64_t e = 1;
  for (unsigned j = 0; j < i; ++j) e *= F.q();
  return F.pow(x, e);
}

// sum c_i x^{q^i} with plain exponentiation instead of Frobenius tables.
inline Felt ref_eval(const LinPoly& f, Felt x) {
  const FieldCtx& F = f.field();
  Felt acc = F.zero();
  for (unsigned i = 0; i < F.n(); ++i) acc = F.add(acc, F.mul(f[i], qpow(F, x, i)));
  return acc;
}

inline std::size_t prime_rank(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  auto inv = [p](std::uint32_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint32_t s = inv(m[rank][c]);
    for (auto& v : m[rank]) v = static_cast<std::uint32_t>(std::uint64_t{v} * s % p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t fac = m[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        m[r][k] = static_cast<std::uint32_t>((m[r][k] + (p - fac) * m[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

// GF(q)-rank from the GF(p) matrix of f on the basis 1, X, ..., X^{d-1}.
inline std::size_t eval_rank(const LinPoly& f) {
  const FieldCtx& F = f.field();
  const unsigned d = F.degree();
  std::vector<std::vector<std::uint32_t>> rows(d, std::vector<std::uint32_t>(d));
  std::uint64_t basis = 1;
  for (unsigned j = 0; j < d; ++j, basis *= F.p()) F.coords(ref_eval(f, F.from_index(basis)), rows[j]);
  return prime_rank(rows, F.p()) / F.e();
}

// Number of roots of f, by enumeration.
inline std::uint64_t root_count(const LinPoly& f) {
  const FieldCtx& F = f.field();
  std::uint64_t roots = 0;
  for (std::uint64_t i = 0; i < F.order(); ++i) roots += ref_eval(f, F.from_index(i)).is_zero();
  return roots;
}

inline std::set<Felt> quotient_values(const LinPoly& f) {
  const FieldCtx& F = f.field();
  std::set<Felt> out;
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    const Felt x = F.from_index(i);
    out.insert(F.div(ref_eval(f, x), x));
  }
  return out;
}

inline bool subset(const std::set<Felt>& a, const std::set<Felt>& b) {
  for (Felt x : a)
    if (!b.contains(x)) return false;
  return true;
}

// Solves g = c id + d f coefficientwise. Returns (c, d) or nullopt.
inline std::optional<std::pair<Felt, Felt>> in_span(const LinPoly& g, const LinPoly& f) {
  const FieldCtx& F = f.field();
  const unsigned n = F.n();
  // d is fixed by any slot i >= 1 where f is nonzero.
  Felt d = F.zero();
  unsigned slot = 0;
  for (unsigned i = 1; i < n; ++i) {
    if (!f[i].is_zero()) {
      slot = i;
      break;
    }
  }
  if (slot != 0) d = F.div(g[slot], f[slot]);
  for (unsigned i = 1; i < n; ++i)
    if (g[i] != F.mul(d, f[i])) return std::nullopt;
  const Felt c = F.sub(g[0], F.mul(d, f[0]));
  return std::pair{c, d};
}

inline LinPoly combo(const LinPoly& f, Felt a, Felt b) {
  // a id + b f
  const FieldCtx& F = f.field();
  LinPoly h(F);
  for (unsigned i = 0; i < F.n(); ++i) h.set(i, F.mul(b, f[i]));
  h.set(0, F.add(h[0], a));
  return h;
}

// (f o g)_m = sum_{i+j=m} f_i g_j^{q^i}, coefficients via plain powers.
inline LinPoly ref_compose(const LinPoly& f, const LinPoly& g) {
  const FieldCtx& F = f.field();
  const unsigned n = F.n();
  LinPoly h(F);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const unsigned m = (i + j) % n;
      h.set(m, F.add(h[m], F.mul(f[i], qpow(F, g[j], i))));
    }
  return h;
}

// Exhaustive GL(2, q^n) search: (a, b) with a x + b f(x) invertible and
// g(a x + b f(x)) in <x, f(x)>.
inline bool gl_equivalent(const LinPoly& f, const LinPoly& g) {
  const FieldCtx& F = f.field();
  for (std::uint64_t ia = 0; ia < F.order(); ++ia) {
    for (std::uint64_t ib = 0; ib < F.order(); ++ib) {
      const LinPoly h = combo(f, F.from_index(ia), F.from_index(ib));
      if (!in_span(ref_compose(g, h), f)) continue;
      if (eval_rank(h) == F.n()) return true;
    }
  }
  return false;
}

// |{phi in C : phi o C in C}| (left) or |{phi in C : C o phi in C}| (right).
// Both sides force phi = phi o id = id o phi into C.
inline std::uint64_t idealiser_size(const LinPoly& f, bool left) {
  const FieldCtx& F = f.field();
  std::uint64_t count = 0;
  for (std::uint64_t ia = 0; ia < F.order(); ++ia) {
    for (std::uint64_t ib = 0; ib < F.order(); ++ib) {
      const LinPoly phi = combo(f, F.from_index(ia), F.from_index(ib));
      const LinPoly prod = left ? ref_compose(phi, f) : ref_compose(f, phi);
      count += in_span(prod, f).has_value();
    }
  }
  return count;
}

// counts[r] over all q^{2n} codewords a x + b f(x).
inline std::vector<std::uint64_t> rank_distribution(const LinPoly& f) {
  const FieldCtx& F = f.field();
  std::vector<std::uint64_t> counts(F.n() + 1, 0);
  for (std::uint64_t ia = 0; ia < F.order(); ++ia)
    for (std::uint64_t ib = 0; ib < F.order(); ++ib)
      ++counts[eval_rank(combo(f, F.from_index(ia), F.from_index(ib)))];
  return counts;
}

inline LinPoly random_poly(const FieldCtx& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
  std::vector<Felt> c(F.n());
  for (auto& x : c) x = F.from_index(pick(rng));
  return LinPoly(F, std::move(c));
}

inline Felt random_felt(const FieldCtx& F, std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<std::uint64_t> pick(nonzero ? 1 : 0, F.order() - 1);
  return F.from_index(pick(rng));
}

}  // namespace oracle
