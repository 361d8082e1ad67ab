#include "linset/linpoly.hpp"

#include "linset/arith.hpp"
#include "linset/error.hpp"
#include "linset/parallel.hpp"

#include <algorithm>
#include <utility>

namespace linset {

LinPoly::LinPoly(const FieldCtx& F) : ctx_(&F), coeffs_(F.n()) {}

LinPoly::LinPoly(const FieldCtx& F, std::vector<Felt> coeffs) : ctx_(&F), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != F.n()) throw Error(Errc::InvalidArgument, "a q-polynomial needs exactly n coefficients");
}

LinPoly LinPoly::identity(const FieldCtx& F) { return monomial(F, 0, F.one()); }

LinPoly LinPoly::monomial(const FieldCtx& F, std::int64_t i, Felt c) {
  LinPoly f(F);
  f.coeffs_[static_cast<std::size_t>(mod_floor(i, F.n()))] = c;
  return f;
}

bool LinPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Felt c) { return c.is_zero(); });
}

namespace {

void require_same(const LinPoly& f, const LinPoly& g) {
  if (&f.field() != &g.field()) throw Error(Errc::CtxMismatch, "q-polynomials over different field contexts");
}

}  // namespace

LinPoly add(const LinPoly& f, const LinPoly& g) {
  require_same(f, g);
  const auto& F = f.field();
  LinPoly r(F);
  for (std::size_t i = 0; i < F.n(); ++i) r.set(i, F.add(f[i], g[i]));
  return r;
}

LinPoly sub(const LinPoly& f, const LinPoly& g) {
  require_same(f, g);
  const auto& F = f.field();
  LinPoly r(F);
  for (std::size_t i = 0; i < F.n(); ++i) r.set(i, F.sub(f[i], g[i]));
  return r;
}

LinPoly scale(Felt lambda, const LinPoly& f) {
  const auto& F = f.field();
  LinPoly r(F);
  for (std::size_t i = 0; i < F.n(); ++i) r.set(i, F.mul(lambda, f[i]));
  return r;
}

LinPoly twist(const LinPoly& f, std::int64_t j) {
  const auto& F = f.field();
  LinPoly r(F);
  for (std::size_t i = 0; i < F.n(); ++i) r.set(i, F.frob_p(f[i], j));
  return r;
}

Felt eval(const LinPoly& f, Felt x) {
  const auto& F = f.field();
  Felt acc = F.zero();
  for (std::size_t i = 0; i < F.n(); ++i) {
    if (!f[i].is_zero()) acc = F.add(acc, F.mul(f[i], F.frob(x, static_cast<std::int64_t>(i))));
  }
  return acc;
}

LinPoly compose(const LinPoly& f, const LinPoly& g) {
  require_same(f, g);
  const auto& F = f.field();
  const std::size_t n = F.n();
  LinPoly r(F);
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (g[j].is_zero()) continue;
      const std::size_t m = (i + j) % n;
      r.set(m, F.add(r[m], F.mul(f[i], F.frob(g[j], static_cast<std::int64_t>(i)))));
    }
  }
  return r;
}

LinPoly compose_power(const LinPoly& f, std::uint64_t k) {
  LinPoly result = LinPoly::identity(f.field());
  LinPoly base = f;
  while (k) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

LinPoly adjoint(const LinPoly& f) {
  const auto& F = f.field();
  const std::size_t n = F.n();
  LinPoly r(F);
  for (std::size_t i = 0; i < n; ++i) r.set(i, F.frob(f[(n - i) % n], static_cast<std::int64_t>(i)));
  return r;
}

FeltMatrix dickson(const LinPoly& f) {
  const auto& F = f.field();
  const std::size_t n = F.n();
  FeltMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d(i, j) = F.frob(f[(j + n - i) % n], static_cast<std::int64_t>(i));
    }
  }
  return d;
}

std::size_t rank(const LinPoly& f) { return rank(f.field(), dickson(f)); }

std::size_t kernel_dim(const LinPoly& f) { return f.field().n() - rank(f); }

std::optional<std::uint64_t> map_order(const LinPoly& f) {
  const auto& F = f.field();
  if (rank(f) < F.n()) return std::nullopt;
  const LinPoly id = LinPoly::identity(F);
  LinPoly cur = f;
  // The order of an element of GL(n, q) is below q^n.
  for (std::uint64_t m = 1; m < F.order(); ++m) {
    if (cur == id) return m;
    cur = compose(cur, f);
  }
  return std::nullopt;
}

void poly_coords(const LinPoly& f, std::span<std::uint32_t> out) {
  const auto& F = f.field();
  const std::size_t m = F.degree();
  for (std::size_t i = 0; i < F.n(); ++i) F.coords(f[i], out.subspan(i * m, m));
}

LinPoly poly_from_coords(const FieldCtx& F, std::span<const std::uint32_t> c) {
  const std::size_t m = F.degree();
  LinPoly f(F);
  for (std::size_t i = 0; i < F.n(); ++i) f.set(i, F.from_coords(c.subspan(i * m, m)));
  return f;
}

std::vector<Felt> quotient_table(const LinPoly& f, unsigned workers) {
  const auto& F = f.field();
  const std::uint64_t G = F.order() - 1;
  std::vector<std::pair<std::int64_t, Felt>> terms;
  for (std::size_t i = 0; i < F.n(); ++i) {
    if (!f[i].is_zero()) terms.emplace_back(static_cast<std::int64_t>(i), f[i]);
  }
  std::vector<Felt> out(G);
  parallel_ranges(G, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    Felt x = F.generator_power(lo);
    const Felt w = F.generator();
    for (std::uint64_t i = lo; i < hi; ++i) {
      Felt acc = F.zero();
      for (const auto& [k, c] : terms) acc = F.add(acc, F.mul(c, F.frob(x, k)));
      out[i] = F.div(acc, x);
      x = F.mul(x, w);
    }
  });
  return out;
}

FiberHistogram fiber_histogram(const LinPoly& f, unsigned workers) {
  const auto& F = f.field();
  const auto values = quotient_table(f, workers);
  FiberHistogram hist;
  if (F.backend() == Backend::Table) {
    std::vector<std::uint32_t> counts(F.order(), 0);
    for (Felt v : values) ++counts[v.raw()];
    for (auto c : counts) {
      if (c) ++hist[c];
    }
  } else {
    std::vector<std::uint64_t> raw(values.size());
    std::transform(values.begin(), values.end(), raw.begin(), [](Felt v) { return v.raw(); });
    std::sort(raw.begin(), raw.end());
    for (std::size_t i = 0; i < raw.size();) {
      std::size_t j = i;
      while (j < raw.size() && raw[j] == raw[i]) ++j;
      ++hist[j - i];
      i = j;
    }
  }
  return hist;
}

}  // namespace linset
