#include "linset/geometry.hpp"

#include "linset/arith.hpp"
#include "linset/error.hpp"
#include "linset/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace linset {

namespace {

FeltMatrix with_cols(FeltMatrix m, std::size_t cols) {
  if (m.rows() == 0) return FeltMatrix(0, cols);
  return m;
}

}  // namespace

ProjSubspace ProjSubspace::from_basis(const FieldCtx& F, const FeltMatrix& vectors) {
  FeltMatrix b = with_cols(vectors, F.n());
  if (b.cols() != F.n()) throw Error(Errc::InvalidArgument, "vectors must have n coordinates");
  rref(F, b);
  FeltMatrix eq = nullspace(F, b);
  return {F, std::move(b), std::move(eq)};
}

ProjSubspace ProjSubspace::from_equations(const FieldCtx& F, const FeltMatrix& equations) {
  FeltMatrix eq = with_cols(equations, F.n());
  if (eq.cols() != F.n()) throw Error(Errc::InvalidArgument, "equations must have n coefficients");
  rref(F, eq);
  FeltMatrix b = nullspace(F, eq);
  return {F, std::move(b), std::move(eq)};
}

bool ProjSubspace::contains(std::span<const Felt> v) const {
  const auto& F = *ctx_;
  for (std::size_t r = 0; r < equations_.rows(); ++r) {
    Felt acc = F.zero();
    for (std::size_t c = 0; c < v.size(); ++c) acc = F.add(acc, F.mul(equations_(r, c), v[c]));
    if (!acc.is_zero()) return false;
  }
  return true;
}

ProjSubspace gamma_k(const FieldCtx& F, unsigned k) {
  const unsigned n = F.n(), t = F.t();
  if (k == 0 || std::gcd(k, n) != 1) throw Error(Errc::BadK, "Gamma_k needs gcd(k, n) = 1");
  FeltMatrix eq(2, n);
  eq(0, 0) = F.one();
  const auto put = [&](std::int64_t i, Felt c) {
    const auto idx = static_cast<std::size_t>(mod_floor(i, n));
    eq(1, idx) = F.add(eq(1, idx), c);
  };
  const std::int64_t kk = k, tt = t, nn = n;
  put(kk, F.one());
  put(tt - kk, F.one());
  put(tt + kk, F.neg(F.one()));
  put(nn - kk, F.one());
  return ProjSubspace::from_equations(F, eq);
}

std::vector<Felt> sigma_vector(const FieldCtx& F, std::span<const Felt> x, std::int64_t m) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  std::vector<Felt> y(x.size());
  for (std::int64_t i = 0; i < n; ++i) y[i] = F.frob(x[mod_floor(i - m, n)], m);
  return y;
}

ProjSubspace apply_sigma(const ProjSubspace& S, std::int64_t m) {
  const auto& F = S.field();
  FeltMatrix b(0, F.n());
  for (std::size_t r = 0; r < S.basis().rows(); ++r) b.append_row(sigma_vector(F, S.basis().row(r), m));
  return ProjSubspace::from_basis(F, b);
}

ProjSubspace intersect(const ProjSubspace& a, const ProjSubspace& b) {
  FeltMatrix eq = a.equations();
  for (std::size_t r = 0; r < b.equations().rows(); ++r) eq.append_row(b.equations().row(r));
  return ProjSubspace::from_equations(a.field(), eq);
}

ProjSubspace join(const ProjSubspace& a, const ProjSubspace& b) {
  FeltMatrix v = a.basis();
  for (std::size_t r = 0; r < b.basis().rows(); ++r) v.append_row(b.basis().row(r));
  return ProjSubspace::from_basis(a.field(), v);
}

std::vector<Felt> subgeometry_point(const FieldCtx& F, Felt u) {
  std::vector<Felt> v(F.n());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.frob(u, static_cast<std::int64_t>(i));
  return v;
}

bool disjoint_from_subgeometry(const ProjSubspace& S) {
  const auto& F = S.field();
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    if (S.contains(subgeometry_point(F, F.element_at(i)))) return false;
  }
  return true;
}

std::vector<int> sigma_chain_dims(const ProjSubspace& S, std::int64_t m, unsigned depth) {
  std::vector<int> dims{S.dim()};
  ProjSubspace acc = S, img = S;
  for (unsigned j = 1; j <= depth; ++j) {
    img = apply_sigma(img, m);
    acc = intersect(acc, img);
    dims.push_back(acc.dim());
  }
  return dims;
}

unsigned intn(const ProjSubspace& S, std::int64_t m) {
  if (!disjoint_from_subgeometry(S)) throw Error(Errc::NotDisjointFromSigma, "subspace meets the subgeometry");
  const int n = static_cast<int>(S.ambient());
  ProjSubspace acc = S, img = S;
  for (unsigned j = 1;; ++j) {
    img = apply_sigma(img, m);
    acc = intersect(acc, img);
    if (acc.dim() > n - 3 - 2 * static_cast<int>(j)) return j;
  }
}

std::optional<std::vector<Felt>> project_point(const ProjSubspace& gamma, std::span<const Felt> point,
                                               const ProjSubspace& line) {
  const auto& F = gamma.field();
  FeltMatrix v = gamma.basis();
  v.append_row(point);
  const ProjSubspace meet = intersect(ProjSubspace::from_basis(F, v), line);
  if (meet.dim() != 0) return std::nullopt;
  const auto row = meet.basis().row(0);
  return std::vector<Felt>(row.begin(), row.end());
}

PointSet project_to_line(const ProjSubspace& gamma, unsigned k, unsigned workers) {
  const auto& F = gamma.field();
  const std::size_t n = F.n();
  const std::size_t second = (n - k % n) % n;
  FeltMatrix l(2, n);
  l(0, 0) = F.one();
  l(1, second) = F.one();
  const ProjSubspace line = ProjSubspace::from_basis(F, l);

  const std::uint64_t total = F.order() - 1;
  std::vector<PointSet> parts(std::max(1u, workers));
  parallel_ranges(total, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto pt = project_point(gamma, subgeometry_point(F, F.generator_power(i)), line);
      if (!pt) throw Error(Errc::InvalidArgument, "projection is not a single point; vertex meets the subgeometry");
      parts[w].push_back(make_point(F, (*pt)[0], (*pt)[second]));
    }
  });
  PointSet out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool pseudoregulus_geometric_test(const ProjSubspace& gamma) {
  const unsigned n = gamma.field().n();
  for (unsigned m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    if (intersect(gamma, apply_sigma(gamma, m)).dim() == static_cast<int>(n) - 4) return true;
  }
  return false;
}

ProjSubspace pseudoregulus_vertex(const FieldCtx& F, std::span<const Felt> point, std::int64_t m) {
  FeltMatrix v(0, F.n());
  std::vector<Felt> cur(point.begin(), point.end());
  for (unsigned i = 0; i + 2 < F.n(); ++i) {
    v.append_row(cur);
    cur = sigma_vector(F, cur, m);
  }
  return ProjSubspace::from_basis(F, v);
}

}  // namespace linset
