#include "linset/linear_set.hpp"

#include "linset/arith.hpp"
#include "linset/error.hpp"
#include "linset/matrix.hpp"
#include "linset/prime_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace linset {

ProjPoint make_point(const FieldCtx& F, Felt a, Felt b) {
  if (!a.is_zero()) return {F.one(), F.div(b, a)};
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "(0, 0) is not a projective point");
  return {F.zero(), F.one()};
}

LinearSet linear_set(const LinPoly& f, unsigned workers) {
  const auto& F = f.field();
  auto values = quotient_table(f, workers);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  PointSet pts;
  pts.reserve(values.size());
  for (Felt v : values) pts.push_back({F.one(), v});
  return {f, std::move(pts)};
}

std::string family_name(Family tag) {
  switch (tag) {
    case Family::U1: return "U1";
    case Family::U2: return "U2";
    case Family::U3: return "U3";
    case Family::U4: return "U4";
    case Family::U5: return "U5";
  }
  return "?";
}

namespace {

[[noreturn]] void bad(Family tag, const std::string& what) {
  throw Error(Errc::BadParams, family_name(tag) + ": " + what);
}

}  // namespace

LinPoly known_family(const FieldCtx& F, const KnownFamily& fam) {
  const unsigned n = F.n();
  const std::int64_t s = fam.s;
  LinPoly f(F);
  const auto put = [&](std::int64_t i, Felt c) {
    const auto idx = static_cast<std::size_t>(mod_floor(i, n));
    f.set(idx, F.add(f[idx], c));
  };
  switch (fam.tag) {
    case Family::U1:
      if (std::gcd(fam.s, n) != 1) bad(fam.tag, "gcd(s, n) = 1 required");
      put(s, F.one());
      break;
    case Family::U2: {
      if (std::gcd(fam.s, n) != 1) bad(fam.tag, "gcd(s, n) = 1 required");
      const Felt N = norm(F, fam.delta, 1);
      if (N.is_zero() || N == F.one()) bad(fam.tag, "N_{q^n/q}(delta) must not be 0 or 1");
      put(s, fam.delta);
      put(static_cast<std::int64_t>(n) - s, F.one());
      break;
    }
    case Family::U3: {
      if (n != 6 && n != 8) bad(fam.tag, "n must be 6 or 8");
      if (std::gcd(fam.s, n / 2) != 1) bad(fam.tag, "gcd(s, n/2) = 1 required");
      const Felt N = norm(F, fam.delta, n / 2);
      if (N.is_zero() || N == F.one()) bad(fam.tag, "N_{q^n/q^{n/2}}(delta) must not be 0 or 1");
      put(s, fam.delta);
      put(s + n / 2, F.one());
      break;
    }
    case Family::U4:
      if (n != 6) bad(fam.tag, "n must be 6");
      if (F.add(F.mul(fam.delta, fam.delta), fam.delta) != F.one()) bad(fam.tag, "delta^2 + delta = 1 required");
      put(1, F.one());
      put(3, F.one());
      put(5, fam.delta);
      break;
    case Family::U5: {
      if (n != 6) bad(fam.tag, "n must be 6");
      if (fam.h.is_zero()) bad(fam.tag, "h^{q^3+1} = -1 required");
      const Felt h = fam.h;
      if (F.mul(F.frob(h, 3), h) != F.neg(F.one())) bad(fam.tag, "h^{q^3+1} = -1 required");
      put(1, F.div(F.frob(h, 1), h));
      put(2, F.neg(F.div(F.frob(h, 2), h)));
      put(4, F.one());
      put(5, F.one());
      break;
    }
  }
  return f;
}

bool inclusion_dickson(const LinPoly& f, const LinPoly& g) {
  const auto& F = f.field();
  const std::size_t n = F.n();
  LinPoly G(F);
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    const Felt x = F.element_at(i);
    const Felt fx = eval(f, x);
    for (std::size_t j = 0; j < n; ++j) G.set(j, F.neg(F.mul(x, g[j])));
    G.set(0, F.add(G[0], fx));
    if (determinant(F, dickson(G)) != F.zero()) return false;
  }
  return true;
}

bool coefficient_filter(const LinPoly& f, const LinPoly& g) {
  const auto& F = f.field();
  const std::int64_t n = F.n();
  const auto c = [&](const LinPoly& h, std::int64_t i) { return h[static_cast<std::size_t>(mod_floor(i, n))]; };
  if (f[0] != g[0]) return false;
  for (std::int64_t k = 1; k < n; ++k) {
    const auto lhs = [&](const LinPoly& h) { return F.mul(c(h, k), F.frob(c(h, n - k), k)); };
    if (lhs(f) != lhs(g)) return false;
  }
  for (std::int64_t k = 2; k < n; ++k) {
    const auto lhs = [&](const LinPoly& h) {
      const Felt t1 = F.mul(F.mul(c(h, 1), F.frob(c(h, k - 1), 1)), F.frob(c(h, n - k), k));
      const Felt t2 = F.mul(F.mul(c(h, k), F.frob(c(h, n - 1), 1)), F.frob(c(h, n - k + 1), k));
      return F.add(t1, t2);
    };
    if (lhs(f) != lhs(g)) return false;
  }
  return true;
}

namespace {

Felt basis_elt(const FieldCtx& F, std::size_t l) {
  std::vector<std::uint32_t> c(F.degree(), 0);
  c[l] = 1;
  return F.from_coords(c);
}

LinPoly scalar_map(const FieldCtx& F, Felt lambda) { return LinPoly::monomial(F, 0, lambda); }

}  // namespace

std::optional<Certificate> subspace_equivalent(const LinPoly& f, const LinPoly& g,
                                               const EquivalenceOptions& opts) {
  if (&f.field() != &g.field()) throw Error(Errc::CtxMismatch, "q-polynomials over different field contexts");
  const auto& F = f.field();
  const std::size_t n = F.n(), m = F.degree();
  const std::uint32_t p = F.p();
  const Certificate identity{F.one(), F.zero(), F.zero(), F.one(), 0};
  if (f == g) return identity;

  std::vector<Felt> basis(m);
  for (std::size_t l = 0; l < m; ++l) basis[l] = basis_elt(F, l);

  std::uint64_t spent = 0;
  const unsigned twists = opts.with_automorphisms ? static_cast<unsigned>(m) : 1;
  for (unsigned j = 0; j < twists; ++j) {
    const LinPoly ft = twist(f, j);
    // Columns: a, b, c, d, each in the GF(p) basis of GF(q^n).
    PrimeMatrix sys(n * m, 4 * m, p);
    std::vector<std::uint32_t> col(n * m);
    for (std::size_t blk = 0; blk < 4; ++blk) {
      for (std::size_t l = 0; l < m; ++l) {
        const Felt z = basis[l];
        LinPoly image(F);
        switch (blk) {
          case 0: image = compose(g, scalar_map(F, z)); break;
          case 1: image = compose(g, scale(z, ft)); break;
          case 2: image = scalar_map(F, F.neg(z)); break;
          default: image = scale(F.neg(z), ft); break;
        }
        poly_coords(image, col);
        for (std::size_t r = 0; r < n * m; ++r) sys(r, blk * m + l) = col[r];
      }
    }
    const PrimeMatrix ker = nullspace(sys);
    const std::size_t D = ker.rows();
    if (D == 0) continue;

    std::vector<std::uint32_t> digits(D, 0), vec(4 * m);
    for (;;) {
      // Increment the base-p counter; digit 0 is least significant.
      std::size_t pos = 0;
      while (pos < D && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == D) break;
      if (++spent > opts.budget) {
        throw Error(Errc::BudgetExceeded, "equivalence search exceeded its budget of " +
                                              std::to_string(opts.budget) + " candidates");
      }
      std::fill(vec.begin(), vec.end(), 0);
      for (std::size_t r = 0; r < D; ++r) {
        if (!digits[r]) continue;
        const auto row = ker.row(r);
        for (std::size_t c = 0; c < 4 * m; ++c) vec[c] = (vec[c] + digits[r] * row[c]) % p;
      }
      const std::span<const std::uint32_t> v(vec);
      const Felt a = F.from_coords(v.subspan(0, m));
      const Felt b = F.from_coords(v.subspan(m, m));
      const Felt c = F.from_coords(v.subspan(2 * m, m));
      const Felt d = F.from_coords(v.subspan(3 * m, m));
      if (F.sub(F.mul(a, d), F.mul(b, c)).is_zero()) continue;
      LinPoly h = scale(b, ft);
      h.set(0, F.add(h[0], a));
      if (rank(h) == n) return Certificate{a, b, c, d, j};
    }
  }
  return std::nullopt;
}

std::pair<Felt, Felt> apply_certificate(const FieldCtx& F, const Certificate& cert, Felt x, Felt fx) {
  const Felt u = F.frob_p(x, cert.automorphism);
  const Felt v = F.frob_p(fx, cert.automorphism);
  return {F.add(F.mul(cert.a, u), F.mul(cert.b, v)), F.add(F.mul(cert.c, u), F.mul(cert.d, v))};
}

bool pseudoregulus_test(const LinPoly& f, const EquivalenceOptions& opts) {
  const auto& F = f.field();
  for (unsigned s = 1; s < F.n(); ++s) {
    if (std::gcd(s, F.n()) != 1) continue;
    if (subspace_equivalent(f, LinPoly::monomial(F, s, F.one()), opts)) return true;
  }
  return false;
}

std::vector<Felt> delta_sweep(const FieldCtx& F, Family tag, std::uint64_t samples) {
  if (tag != Family::U2 && tag != Family::U3) {
    throw Error(Errc::InvalidArgument, "delta sweeps exist for U2 and U3 only");
  }
  const unsigned level = tag == Family::U2 ? 1 : F.t();
  std::vector<Felt> valid;
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    const Felt d = F.element_at(i);
    const Felt N = norm(F, d, level);
    if (N != F.one()) valid.push_back(d);
  }
  if (F.q() == 3 || valid.size() <= samples) return valid;
  std::vector<Felt> out;
  out.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) out.push_back(valid[i * valid.size() / samples]);
  return out;
}

std::optional<LpMatch> lp_type_test(const LinPoly& f, const std::vector<Felt>& deltas,
                                    const EquivalenceOptions& opts) {
  const auto& F = f.field();
  for (unsigned s = 1; 2 * s < F.n(); ++s) {
    if (std::gcd(s, F.n()) != 1) continue;
    for (Felt d : deltas) {
      const LinPoly g = known_family(F, {Family::U2, s, d, {}});
      if (auto cert = subspace_equivalent(f, g, opts)) return LpMatch{s, d, *cert};
    }
  }
  return std::nullopt;
}

}  // namespace linset
