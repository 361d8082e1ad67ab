#include "linset/field.hpp"

#include "linset/arith.hpp"
#include "linset/error.hpp"
#include "prime_poly.hpp"

#include <array>
#include <numeric>
#include <string>

namespace linset {

// Coefficient-vector arithmetic on polynomial-basis indices.
struct FieldCtx::PolyArith {
  using Digits = std::array<std::uint32_t, FieldCtx::kMaxDegree>;

  std::uint32_t p;
  unsigned m;
  std::vector<std::uint32_t> modulus;  // monic, size m + 1
  std::vector<std::uint64_t> place;    // p^i
  // frob[j][r * m + c]: coordinate r of (X^c)^{p^j}
  std::vector<std::vector<std::uint32_t>> frob;

  PolyArith(std::uint32_t p_, const std::vector<std::uint32_t>& mod) : p(p_), m(static_cast<unsigned>(mod.size() - 1)), modulus(mod) {
    place.resize(m + 1);
    place[0] = 1;
    for (unsigned i = 1; i <= m; ++i) place[i] = place[i - 1] * p;
    frob.resize(m);
    for (unsigned j = 0; j < m; ++j) {
      frob[j].assign(static_cast<std::size_t>(m) * m, 0);
      for (unsigned c = 0; c < m; ++c) {
        detail::PrimePoly xc(c + 1, 0);
        xc[c] = 1;
        auto img = detail::poly_powmod(xc, place[j], modulus, p);
        for (unsigned r = 0; r < img.size(); ++r) frob[j][r * m + c] = img[r];
      }
    }
  }

  void decode(std::uint64_t idx, Digits& d) const {
    for (unsigned i = 0; i < m; ++i) {
      d[i] = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
  }

  std::uint64_t encode(const Digits& d) const {
    std::uint64_t idx = 0;
    for (unsigned i = m; i-- > 0;) idx = idx * p + d[i];
    return idx;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    Digits x, y;
    decode(a, x);
    decode(b, y);
    for (unsigned i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }

  std::uint64_t neg(std::uint64_t a) const {
    Digits x;
    decode(a, x);
    for (unsigned i = 0; i < m; ++i) x[i] = (p - x[i]) % p;
    return encode(x);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    Digits x, y;
    decode(a, x);
    decode(b, y);
    std::array<std::uint64_t, 2 * FieldCtx::kMaxDegree> prod{};
    for (unsigned i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < m; ++j) prod[i + j] += static_cast<std::uint64_t>(x[i]) * y[j];
    }
    for (unsigned i = 0; i < 2 * m - 1; ++i) prod[i] %= p;
    // X^m = -sum_{i<m} modulus[i] X^i
    for (unsigned top = 2 * m - 1; top-- > m;) {
      const std::uint64_t c = prod[top] % p;
      if (c == 0) continue;
      prod[top] = 0;
      const unsigned shift = top - m;
      for (unsigned i = 0; i < m; ++i) {
        prod[shift + i] = (prod[shift + i] + (p - modulus[i]) * c) % p;
      }
    }
    Digits out;
    for (unsigned i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p);
    return encode(out);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }

  std::uint64_t frob_p(std::uint64_t a, unsigned j) const {
    if (j == 0) return a;
    Digits x, out{};
    decode(a, x);
    const auto& mat = frob[j];
    for (unsigned r = 0; r < m; ++r) {
      std::uint64_t acc = 0;
      for (unsigned c = 0; c < m; ++c) acc += static_cast<std::uint64_t>(mat[r * m + c]) * x[c];
      out[r] = static_cast<std::uint32_t>(acc % p);
    }
    return encode(out);
  }
};

FieldCtx::FieldCtx(const FieldSpec& spec, Backend backend) : spec_(spec) {
  if (!is_prime(spec.p)) throw Error(Errc::NonPrimeP, "p = " + std::to_string(spec.p) + " is not prime");
  if (spec.p == 2) throw Error(Errc::EvenP, "characteristic 2 is not supported");
  if (spec.e == 0) throw Error(Errc::InvalidArgument, "e must be >= 1");
  if (spec.t < 3) throw Error(Errc::TSmall, "t = " + std::to_string(spec.t) + " < 3");

  degree_ = spec.e * 2 * spec.t;
  auto ord = checked_pow(spec.p, degree_, kSizeLimit);
  if (degree_ > kMaxDegree || !ord) {
    throw Error(Errc::FieldTooLarge, "p^(e*n) exceeds 2^40");
  }
  order_ = *ord;
  group_order_ = order_ - 1;
  q_ = *checked_pow(spec.p, spec.e);

  if (spec_.modulus.empty()) {
    spec_.modulus = detail::default_modulus(spec.p, degree_);
  } else {
    const auto& mod = spec_.modulus;
    if (mod.size() != degree_ + 1) {
      throw Error(Errc::InvalidModulus, "modulus must have degree e*n = " + std::to_string(degree_));
    }
    for (auto c : mod) {
      if (c >= spec.p) throw Error(Errc::InvalidModulus, "modulus coefficient out of range");
    }
    if (mod.back() != 1) throw Error(Errc::InvalidModulus, "modulus must be monic");
    if (!detail::is_irreducible(mod, spec.p)) {
      throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(p)");
    }
  }

  poly_ = std::make_shared<const PolyArith>(spec.p, spec_.modulus);

  // Smallest primitive index.
  const auto factors = prime_factors(group_order_);
  std::uint64_t gen_index = 0;
  for (std::uint64_t idx = 2; idx < order_; ++idx) {
    bool primitive = true;
    for (auto r : factors) {
      if (poly_->pow(idx, group_order_ / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_index = idx;
      break;
    }
  }

  if (backend == Backend::Automatic) {
    backend = order_ <= kTableLimit ? Backend::Table : Backend::Polynomial;
  }
  if (backend == Backend::Table && order_ > (std::uint64_t{1} << 32)) {
    throw Error(Errc::FieldTooLarge, "table backend needs fewer than 2^32 elements");
  }
  backend_ = backend;

  if (backend_ == Backend::Table) {
    const std::uint64_t G = group_order_;
    exp_.resize(G);
    log_.assign(order_, 0);
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i < G; ++i) {
      exp_[i] = static_cast<std::uint32_t>(cur);
      log_[cur] = static_cast<std::uint32_t>(i);
      cur = poly_->mul(cur, gen_index);
    }
    zech_.resize(G);
    for (std::uint64_t d = 0; d < G; ++d) {
      std::uint64_t idx = exp_[d];
      const std::uint64_t d0 = idx % spec.p;
      idx = idx - d0 + (d0 + 1) % spec.p;
      zech_[d] = idx == 0 ? 0 : log_[idx] + 1;
    }
    frob_mult_.resize(n());
    std::uint64_t qm = q_ % G;
    frob_mult_[0] = 1 % G;
    for (unsigned j = 1; j < n(); ++j) frob_mult_[j] = frob_mult_[j - 1] * qm % G;
    frob_p_mult_.resize(degree_);
    frob_p_mult_[0] = 1 % G;
    for (unsigned j = 1; j < degree_; ++j) frob_p_mult_[j] = frob_p_mult_[j - 1] * spec.p % G;
    one_ = Felt{1};
    generator_ = Felt{2};
    minus_one_ = Felt{G / 2 + 1};
  } else {
    one_ = Felt{1};
    generator_ = Felt{gen_index};
    minus_one_ = Felt{spec.p - 1};
  }
  half_ = inv(from_int(2));
}

Felt FieldCtx::from_index(std::uint64_t index) const {
  if (index >= order_) throw Error(Errc::InvalidArgument, "element index out of range");
  if (backend_ == Backend::Table) return index == 0 ? Felt{} : Felt{std::uint64_t{log_[index]} + 1};
  return Felt{index};
}

std::uint64_t FieldCtx::to_index(Felt x) const {
  if (backend_ == Backend::Table) return x.raw_ == 0 ? 0 : exp_[x.raw_ - 1];
  return x.raw_;
}

Felt FieldCtx::from_int(std::int64_t v) const {
  return from_index(static_cast<std::uint64_t>(mod_floor(v, spec_.p)));
}

void FieldCtx::coords(Felt x, std::span<std::uint32_t> out) const {
  std::uint64_t idx = to_index(x);
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = static_cast<std::uint32_t>(idx % spec_.p);
    idx /= spec_.p;
  }
}

Felt FieldCtx::from_coords(std::span<const std::uint32_t> c) const {
  std::uint64_t idx = 0;
  for (unsigned i = degree_; i-- > 0;) idx = idx * spec_.p + c[i] % spec_.p;
  return from_index(idx);
}

Felt FieldCtx::table_add(Felt a, Felt b) const {
  const std::uint64_t G = group_order_;
  const std::uint64_t la = a.raw_ - 1, lb = b.raw_ - 1;
  const std::uint64_t d = lb >= la ? lb - la : lb + G - la;
  const std::uint32_t z = zech_[d];
  if (z == 0) return Felt{};
  std::uint64_t r = la + (z - 1);
  if (r >= G) r -= G;
  return Felt{r + 1};
}

Felt FieldCtx::add(Felt a, Felt b) const {
  if (a.raw_ == 0) return b;
  if (b.raw_ == 0) return a;
  if (backend_ == Backend::Table) return table_add(a, b);
  return Felt{poly_->add(a.raw_, b.raw_)};
}

Felt FieldCtx::neg(Felt a) const {
  if (a.raw_ == 0) return a;
  if (backend_ == Backend::Table) return mul(a, minus_one_);
  return Felt{poly_->neg(a.raw_)};
}

Felt FieldCtx::mul(Felt a, Felt b) const {
  if (a.raw_ == 0 || b.raw_ == 0) return Felt{};
  if (backend_ == Backend::Table) {
    std::uint64_t s = (a.raw_ - 1) + (b.raw_ - 1);
    if (s >= group_order_) s -= group_order_;
    return Felt{s + 1};
  }
  return Felt{poly_->mul(a.raw_, b.raw_)};
}

Felt FieldCtx::inv(Felt a) const {
  if (a.raw_ == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
  if (backend_ == Backend::Table) {
    const std::uint64_t l = a.raw_ - 1;
    return Felt{(l == 0 ? 0 : group_order_ - l) + 1};
  }
  return Felt{poly_->pow(a.raw_, group_order_ - 1)};
}

Felt FieldCtx::pow(Felt a, std::uint64_t exp) const {
  if (exp == 0) return one_;
  if (a.raw_ == 0) return Felt{};
  if (backend_ == Backend::Table) {
    // group_order_ < 2^26, so the product fits in 64 bits.
    const std::uint64_t l = (a.raw_ - 1) * (exp % group_order_);
    return Felt{l % group_order_ + 1};
  }
  return Felt{poly_->pow(a.raw_, exp)};
}

Felt FieldCtx::frob(Felt x, std::int64_t j) const {
  if (x.raw_ == 0) return x;
  const auto jj = static_cast<std::size_t>(mod_floor(j, n()));
  if (jj == 0) return x;
  if (backend_ == Backend::Table) return Felt{(x.raw_ - 1) * frob_mult_[jj] % group_order_ + 1};
  return Felt{poly_->frob_p(x.raw_, static_cast<unsigned>((jj * spec_.e) % degree_))};
}

Felt FieldCtx::frob_p(Felt x, std::int64_t j) const {
  if (x.raw_ == 0) return x;
  const auto jj = static_cast<std::size_t>(mod_floor(j, degree_));
  if (jj == 0) return x;
  if (backend_ == Backend::Table) return Felt{(x.raw_ - 1) * frob_p_mult_[jj] % group_order_ + 1};
  return Felt{poly_->frob_p(x.raw_, static_cast<unsigned>(jj))};
}

Felt FieldCtx::generator_power(std::uint64_t i) const {
  if (backend_ == Backend::Table) return Felt{i % group_order_ + 1};
  return pow(generator_, i);
}

std::uint64_t FieldCtx::mult_order(Felt a) const {
  if (a.raw_ == 0) throw Error(Errc::InvalidArgument, "order of zero");
  if (backend_ == Backend::Table) return group_order_ / std::gcd(a.raw_ - 1, group_order_);
  std::uint64_t ord = group_order_;
  for (auto r : prime_factors(group_order_)) {
    while (ord % r == 0 && pow(a, ord / r) == one_) ord /= r;
  }
  return ord;
}

std::shared_ptr<const FieldCtx> build_field(const FieldSpec& spec, Backend backend) {
  return std::make_shared<const FieldCtx>(spec, backend);
}

namespace {

void check_level(const FieldCtx& F, unsigned level) {
  if (level == 0 || F.n() % level != 0) {
    throw Error(Errc::InvalidArgument, "subfield level must divide n");
  }
}

}  // namespace

Felt trace(const FieldCtx& F, Felt x, unsigned level) {
  check_level(F, level);
  Felt acc = F.zero();
  for (unsigned j = 0; j < F.n(); j += level) acc = F.add(acc, F.frob(x, j));
  return acc;
}

Felt norm(const FieldCtx& F, Felt x, unsigned level) {
  check_level(F, level);
  const std::uint64_t ql = *checked_pow(F.q(), level);
  return F.pow(x, (F.order() - 1) / (ql - 1));
}

bool in_W(const FieldCtx& F, Felt x) {
  return F.add(x, F.frob(x, F.t())).is_zero();
}

Split split(const FieldCtx& F, Felt x) {
  const Felt conj = F.frob(x, F.t());
  return {F.mul(F.add(x, conj), F.half()), F.mul(F.sub(x, conj), F.half())};
}

std::optional<Felt> w_unity_root_exists(const FieldCtx& F, unsigned k) {
  const std::uint64_t exp = *checked_pow(F.q(), k % F.n()) + 1;
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    const Felt x = F.element_at(i);
    if (!in_W(F, x)) continue;
    if (F.pow(x, exp) == F.one()) return x;
  }
  return std::nullopt;
}

}  // namespace linset
