#pragma once

// Dense polynomials over GF(p), little-endian coefficient vectors.
// Internal to the field constructor.

#include <cstdint>
#include <vector>

namespace linset::detail {

using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a);
PrimePoly poly_sub(const PrimePoly& a, const PrimePoly& b, std::uint32_t p);
PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& mod, std::uint32_t p);
PrimePoly poly_rem(PrimePoly a, const PrimePoly& mod, std::uint32_t p);
PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p);
PrimePoly poly_powmod(const PrimePoly& base, std::uint64_t exp, const PrimePoly& mod, std::uint32_t p);

/// Rabin's test. `f` must be monic of degree >= 1.
bool is_irreducible(const PrimePoly& f, std::uint32_t p);

/// Smallest monic irreducible of the given degree, ordering candidates by
/// the integer sum_{i<degree} c_i p^i of their non-leading coefficients.
PrimePoly default_modulus(std::uint32_t p, unsigned degree);

}  // namespace linset::detail
