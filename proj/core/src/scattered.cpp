#include "linset/scattered.hpp"

#include "linset/arith.hpp"
#include "linset/error.hpp"
#include "linset/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <unordered_map>

namespace linset {

Felt alpha(const FieldCtx& F, Felt x) {
  const Felt tr = F.add(x, F.frob(x, F.t()));
  return F.mul(F.frob(tr, F.t() - 1), F.half());
}

Felt beta(const FieldCtx& F, Felt x) {
  return F.mul(F.frob(F.sub(x, F.frob(x, F.t())), 1), F.half());
}

Felt alpha_iterate(const FieldCtx& F, Felt x, unsigned k) {
  const std::int64_t shift = static_cast<std::int64_t>(k - 1) * (F.t() - 1);
  return F.frob(alpha(F, x), shift);
}

Felt beta_iterate(const FieldCtx& F, Felt x, unsigned k) {
  return F.frob(beta(F, x), static_cast<std::int64_t>(k) - 1);
}

LinPoly alpha_poly(const FieldCtx& F) {
  LinPoly a(F);
  a.set(F.t() - 1, F.half());
  a.set(2 * F.t() - 1, F.half());
  return a;
}

LinPoly beta_poly(const FieldCtx& F) {
  LinPoly b(F);
  b.set(1, F.half());
  b.set(F.t() + 1, F.neg(F.half()));
  return b;
}

PsiFamily build_psi(const FieldCtx& F, unsigned k) {
  const unsigned n = F.n(), t = F.t();
  if (k < 1 || k >= n) throw Error(Errc::BadK, "psi^(k) needs 1 <= k < n");
  LinPoly f(F);
  const Felt h = F.half();
  const auto put = [&](std::int64_t idx, Felt c) {
    const auto i = static_cast<std::size_t>(mod_floor(idx, n));
    f.set(i, F.add(f[i], c));
  };
  const std::int64_t kk = k, tt = t;
  put(kk, h);
  put(tt - kk, h);
  put(tt + kk, F.neg(h));
  put(2 * tt - kk, h);
  return {&F, t, k, std::move(f)};
}

bool theorem_predicate(std::uint64_t q, unsigned t, unsigned k) {
  if (t % 2 == 0) return std::gcd(k, t) == 1;
  return std::gcd(k, 2 * t) == 1 && q % 4 == 1;
}

namespace {

bool independent(const FieldCtx& F, Felt y, Felt z) {
  return !F.in_subfield(F.div(z, y), 1);
}

// First y (generator order) whose fiber holds a GF(q)-independent partner,
// and the first such partner.
std::optional<std::pair<Felt, Felt>> fiber_pair(const FieldCtx& F, const std::vector<Felt>& values, Felt target) {
  std::optional<Felt> first;
  Felt x = F.one();
  for (std::size_t i = 0; i < values.size(); ++i, x = F.mul(x, F.generator())) {
    if (values[i] != target) continue;
    if (!first) {
      first = x;
    } else if (independent(F, *first, x)) {
      return std::make_pair(*first, x);
    }
  }
  return std::nullopt;
}

}  // namespace

bool verify_fiber_witness(const LinPoly& f, Felt y, Felt z) {
  const auto& F = f.field();
  if (y.is_zero() || z.is_zero() || !independent(F, y, z)) return false;
  return F.div(eval(f, y), y) == F.div(eval(f, z), z);
}

ScatterVerdict is_scattered_fibers(const LinPoly& f, unsigned workers) {
  const auto& F = f.field();
  const auto values = quotient_table(f, workers);
  const std::uint64_t target = (F.order() - 1) / (F.q() - 1);
  ScatterVerdict v;
  v.criterion = ScatterCriterion::Fibers;
  const std::uint64_t big = F.q() - 1;

  std::optional<Felt> oversized;
  if (F.backend() == Backend::Table) {
    std::vector<std::uint32_t> counts(F.order(), 0);
    for (Felt val : values) {
      if (counts[val.raw()]++ == 0) ++v.distinct_values;
    }
    for (Felt val : values) {
      if (counts[val.raw()] > big) {
        oversized = val;
        break;
      }
    }
  } else {
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    for (Felt val : values) ++counts[val.raw()];
    v.distinct_values = counts.size();
    for (Felt val : values) {
      if (counts[val.raw()] > big) {
        oversized = val;
        break;
      }
    }
  }
  v.scattered = v.distinct_values == target;
  if (!v.scattered && oversized) v.witness = fiber_pair(F, values, *oversized);
  return v;
}

ScatterVerdict is_scattered_ranks(const LinPoly& f, unsigned workers) {
  const auto& F = f.field();
  const std::size_t n = F.n();
  const FeltMatrix base = dickson(f);
  const std::uint64_t total = F.order();
  std::atomic<std::uint64_t> first_bad{total};

  parallel_ranges(total, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    std::vector<Felt> work(n * n);
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i >= first_bad.load(std::memory_order_relaxed)) return;
      const Felt m = F.element_at(i);
      std::copy(base.data().begin(), base.data().end(), work.begin());
      for (std::size_t r = 0; r < n; ++r) {
        work[r * n + r] = F.add(work[r * n + r], F.frob(m, static_cast<std::int64_t>(r)));
      }
      if (rank_in_place(F, work, n, n) + 1 < n) {
        std::uint64_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });

  ScatterVerdict v;
  v.criterion = ScatterCriterion::Ranks;
  v.scattered = first_bad.load() == total;
  if (!v.scattered) {
    // Two independent roots of f(x) + m x, i.e. f(x)/x = -m.
    const Felt slope = F.neg(F.element_at(first_bad.load()));
    std::optional<Felt> y;
    Felt x = F.one();
    for (std::uint64_t i = 0; i + 1 < F.order(); ++i, x = F.mul(x, F.generator())) {
      if (eval(f, x) != F.mul(slope, x)) continue;
      if (!y) {
        y = x;
      } else if (independent(F, *y, x)) {
        v.witness = std::make_pair(*y, x);
        break;
      }
    }
  }
  return v;
}

std::optional<RhoWitness> nonscattered_witness_search(const LinPoly& f) {
  const auto& F = f.field();
  const auto values = quotient_table(f);
  std::unordered_map<std::uint64_t, Felt> first;
  first.reserve(values.size());
  Felt x = F.one();
  for (std::size_t i = 0; i < values.size(); ++i, x = F.mul(x, F.generator())) {
    auto [it, inserted] = first.try_emplace(values[i].raw(), x);
    if (inserted) continue;
    if (independent(F, it->second, x)) return RhoWitness{F.div(x, it->second), it->second};
  }
  return std::nullopt;
}

std::optional<Felt> rho_for_point(const LinPoly& f, Felt x) {
  const auto& F = f.field();
  if (x.is_zero()) throw Error(Errc::InvalidArgument, "witness point must be nonzero");
  const Felt fx = eval(f, x);
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    const Felt rho = F.element_at(i);
    if (F.in_subfield(rho, 1)) continue;
    if (eval(f, F.mul(rho, x)) == F.mul(rho, fx)) return rho;
  }
  return std::nullopt;
}

bool verify_rho_witness(const LinPoly& f, const RhoWitness& w) {
  const auto& F = f.field();
  if (w.x.is_zero() || F.in_subfield(w.rho, 1)) return false;
  return eval(f, F.mul(w.rho, w.x)) == F.mul(w.rho, eval(f, w.x));
}

BaerReport baer_partition_check(const PsiFamily& psi) {
  const auto& F = *psi.ctx;
  const unsigned t = psi.t, k = psi.k;
  if (k < 1 || k >= t) throw Error(Errc::BadK, "Baer partition check needs 1 <= k < t");
  if (!is_scattered_fibers(psi.poly).scattered) {
    throw Error(Errc::NotScattered, "psi^(k) is not scattered for these parameters");
  }

  // Points of L are <(1, v)> with v = psi(x)/x; those in the subline have v in GF(q^t).
  std::set<Felt> in_subline;
  for (Felt v : quotient_table(psi.poly)) {
    if (F.in_subfield(v, t)) in_subline.insert(v);
  }

  const std::uint64_t qt = *checked_pow(F.q(), t);
  const Felt sub_gen = F.generator_power((F.order() - 1) / (qt - 1));  // generates GF(q^t)^*
  const Felt w_shift = F.generator_power((qt + 1) / 2);                // W^* = w_shift * GF(q^t)^*

  std::set<Felt> fixed_part, w_part;
  Felt h = F.one();
  for (std::uint64_t i = 0; i + 1 < qt; ++i, h = F.mul(h, sub_gen)) {
    fixed_part.insert(F.div(F.frob(h, static_cast<std::int64_t>(t) - k), h));
    const Felt r = F.mul(w_shift, h);
    w_part.insert(F.div(F.frob(r, k), r));
  }

  BaerReport rep;
  rep.intersection = in_subline.size();
  rep.fixed_part = fixed_part.size();
  rep.w_part = w_part.size();
  rep.expected_part = (qt - 1) / (F.q() - 1);
  std::vector<Felt> common;
  std::set_intersection(fixed_part.begin(), fixed_part.end(), w_part.begin(), w_part.end(),
                        std::back_inserter(common));
  rep.parts_disjoint = common.empty();
  std::set<Felt> both = fixed_part;
  both.insert(w_part.begin(), w_part.end());
  rep.parts_inside_linear_set = std::includes(in_subline.begin(), in_subline.end(), both.begin(), both.end());
  rep.union_equals_intersection = both == in_subline;
  return rep;
}

}  // namespace linset
