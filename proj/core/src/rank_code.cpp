#include "linset/rank_code.hpp"

#include "linset/arith.hpp"
#include "linset/error.hpp"
#include "linset/parallel.hpp"
#include "linset/prime_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace linset {

RankCode build_code(const LinPoly& f) {
  bool scalar = true;
  for (std::size_t i = 1; i < f.size(); ++i) scalar = scalar && f[i].is_zero();
  return {f, scalar};
}

std::uint64_t RankDistribution::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

RankDistribution rank_distribution(const RankCode& C, unsigned workers) {
  const auto& F = C.f.field();
  const std::size_t n = F.n();
  const std::uint64_t N = F.order();
  RankDistribution dist;
  dist.counts.assign(n + 1, 0);
  dist.counts[0] = 1;
  if (C.degenerate) {
    dist.counts[n] = N - 1;
    return dist;
  }

  // Representative (0, 1) is the identity; (1, b) is f + b*id.
  std::vector<std::vector<std::uint64_t>> partial(std::max(1u, workers), std::vector<std::uint64_t>(n + 1, 0));
  const FeltMatrix base = dickson(C.f);
  parallel_ranges(N, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    std::vector<Felt> work(n * n);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Felt b = F.element_at(i);
      std::copy(base.data().begin(), base.data().end(), work.begin());
      for (std::size_t r = 0; r < n; ++r) {
        work[r * n + r] = F.add(work[r * n + r], F.frob(b, static_cast<std::int64_t>(r)));
      }
      ++partial[w][rank_in_place(F, work, n, n)];
    }
  });
  std::vector<std::uint64_t> reps(n + 1, 0);
  reps[n] = 1;
  for (const auto& p : partial) {
    for (std::size_t r = 0; r <= n; ++r) reps[r] += p[r];
  }
  for (std::size_t r = 0; r <= n; ++r) dist.counts[r] += reps[r] * (N - 1);
  return dist;
}

unsigned min_rank_distance(const RankDistribution& dist) {
  for (std::size_t r = 1; r < dist.counts.size(); ++r) {
    if (dist.counts[r]) return static_cast<unsigned>(r);
  }
  return 0;
}

unsigned min_rank_distance(const RankCode& C, unsigned workers) {
  return min_rank_distance(rank_distribution(C, workers));
}

bool is_mrd(const RankCode& C, const RankDistribution& dist) {
  return !C.degenerate && min_rank_distance(dist) + 1 == C.f.field().n();
}

bool is_mrd(const RankCode& C, unsigned workers) { return is_mrd(C, rank_distribution(C, workers)); }

namespace {

std::vector<std::uint32_t> vec_of(const LinPoly& f) {
  std::vector<std::uint32_t> v(f.field().n() * f.field().degree());
  poly_coords(f, v);
  return v;
}

// Rows of `rows` span a space containing v?
bool in_span(const std::vector<std::vector<std::uint32_t>>& rows, const std::vector<std::uint32_t>& v,
             std::uint32_t p) {
  const std::size_t cols = v.size();
  PrimeMatrix m(rows.size() + 1, cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  std::copy(v.begin(), v.end(), m.row(rows.size()).begin());
  PrimeMatrix base(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), base.row(r).begin());
  return rank(std::move(m)) == rank(std::move(base));
}

}  // namespace

IdealiserReport idealiser(const RankCode& C, Side side, std::uint64_t enumeration_limit) {
  const auto& F = C.f.field();
  const std::size_t n = F.n(), m = F.degree(), len = n * m;
  const std::uint32_t p = F.p();

  std::vector<LinPoly> gens;
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<std::uint32_t> c(m, 0);
    c[l] = 1;
    const Felt z = F.from_coords(c);
    gens.push_back(scale(z, C.f));
    gens.push_back(LinPoly::monomial(F, 0, z));
  }

  // v lies in C iff ann * v = 0.
  PrimeMatrix cmat(gens.size(), len, p);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    const auto v = vec_of(gens[r]);
    std::copy(v.begin(), v.end(), cmat.row(r).begin());
  }
  const PrimeMatrix ann = nullspace(cmat);

  // Unknown u = i*m + l is the coefficient of X^l in phi_i.
  PrimeMatrix sys(gens.size() * ann.rows(), len, p);
  for (std::size_t u = 0; u < len; ++u) {
    std::vector<std::uint32_t> c(m, 0);
    c[u % m] = 1;
    const LinPoly phi = LinPoly::monomial(F, static_cast<std::int64_t>(u / m), F.from_coords(c));
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto v = vec_of(side == Side::Left ? compose(phi, gens[j]) : compose(gens[j], phi));
      for (std::size_t a = 0; a < ann.rows(); ++a) {
        std::uint64_t acc = 0;
        const auto row = ann.row(a);
        for (std::size_t x = 0; x < len; ++x) acc += static_cast<std::uint64_t>(row[x]) * v[x];
        sys(j * ann.rows() + a, u) = static_cast<std::uint32_t>(acc % p);
      }
    }
  }
  const PrimeMatrix sol = nullspace(sys);

  IdealiserReport rep;
  rep.side = side;
  rep.dim_over_p = static_cast<unsigned>(sol.rows());
  rep.dim_over_q = rep.dim_over_p / F.e();
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t r = 0; r < sol.rows(); ++r) {
    rows.emplace_back(sol.row(r).begin(), sol.row(r).end());
    rep.basis.push_back(poly_from_coords(F, rows.back()));
  }

  rep.contains_identity = in_span(rows, vec_of(LinPoly::identity(F)), p);
  rep.closed = true;
  rep.commutative = true;
  for (std::size_t i = 0; i < rep.basis.size(); ++i) {
    for (std::size_t j = 0; j < rep.basis.size(); ++j) {
      const LinPoly ij = compose(rep.basis[i], rep.basis[j]);
      if (rep.closed && !in_span(rows, vec_of(ij), p)) rep.closed = false;
      if (j > i && ij != compose(rep.basis[j], rep.basis[i])) rep.commutative = false;
    }
  }

  const auto space = checked_pow(p, rep.dim_over_p, enumeration_limit);
  if (space) {
    bool ok = true;
    std::vector<std::uint32_t> digits(rep.dim_over_p, 0), v(len);
    for (;;) {
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
      std::fill(v.begin(), v.end(), 0);
      for (std::size_t r = 0; r < digits.size(); ++r) {
        if (!digits[r]) continue;
        for (std::size_t x = 0; x < len; ++x) v[x] = (v[x] + digits[r] * rows[r][x]) % p;
      }
      if (rank(poly_from_coords(F, v)) != n) {
        ok = false;
        break;
      }
    }
    rep.nonzero_invertible = ok;
  }
  return rep;
}

RankCode adjoint_code(const RankCode& C) { return build_code(adjoint(C.f)); }

std::optional<Certificate> code_equivalent(const RankCode& a, const RankCode& b, const EquivalenceOptions& opts) {
  return subspace_equivalent(a.f, b.f, opts);
}

NewCodes count_new_codes(std::uint64_t q, unsigned t) {
  if (q % 2 == 0) throw Error(Errc::BadHypotheses, "q must be odd");
  if (t < 3) throw Error(Errc::BadHypotheses, "t >= 3 required");
  if (t % 2 == 1 && q % 4 != 1) throw Error(Errc::BadHypotheses, "q = 1 mod 4 required for odd t");
  NewCodes out;
  for (unsigned k = 1; k < t; ++k) {
    if (std::gcd(k, 2 * t) == 1) out.ks.push_back(k);
  }
  out.count = out.ks.size();
  return out;
}

}  // namespace linset
