#include "prime_poly.hpp"

#include "linset/arith.hpp"

#include <utility>

namespace linset::detail {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly poly_sub(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
  PrimePoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

PrimePoly poly_rem(PrimePoly a, const PrimePoly& mod, std::uint32_t p) {
  trim(a);
  const std::size_t dm = mod.size() - 1;
  const std::uint32_t lead_inv = inv_mod(mod.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * mod[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_rem(std::move(r), mod, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * li % p);
  }
  return a;
}

PrimePoly poly_powmod(const PrimePoly& base, std::uint64_t exp, const PrimePoly& mod, std::uint32_t p) {
  PrimePoly result{1};
  PrimePoly b = poly_rem(base, mod, p);
  while (exp) {
    if (exp & 1) result = poly_mulmod(result, b, mod, p);
    exp >>= 1;
    if (exp) b = poly_mulmod(b, b, mod, p);
  }
  return result;
}

bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 0) return false;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  const PrimePoly x{0, 1};
  // frob[i] = X^{p^i} mod f
  std::vector<PrimePoly> frob(m + 1);
  frob[0] = x;
  for (unsigned i = 1; i <= m; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (poly_sub(frob[m], x, p).size() != 0) return false;
  for (auto r : prime_factors(m)) {
    PrimePoly g = poly_gcd(f, poly_sub(frob[m / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

PrimePoly default_modulus(std::uint32_t p, unsigned degree) {
  const std::uint64_t count = *checked_pow(p, degree);
  PrimePoly f(degree + 1, 0);
  f[degree] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  return {};  // unreachable: irreducibles exist in every degree
}

}  // namespace linset::detail
