#pragma once

// Small integer helpers shared by the field constructor and the code counters.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace linset {

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

/// base^exp, or nullopt if the result exceeds `limit`.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                                std::uint64_t limit = UINT64_MAX) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  return r;
}

inline std::uint64_t euler_phi(std::uint64_t v) {
  std::uint64_t r = v;
  for (auto pf : prime_factors(v)) r = r / pf * (pf - 1);
  return r;
}

/// Non-negative residue of a mod n for signed a.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace linset
