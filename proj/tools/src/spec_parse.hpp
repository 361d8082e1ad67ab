#pragma once

// Parsing of polynomial descriptors and modulus files given on the command line.
//
//   psi:k          psi^(k)
//   u1:s           x^{q^s}
//   u2:s,D         delta x^{q^s} + x^{q^{n-s}}, D a field index or "all"
//   u3:s,D         delta x^{q^s} + x^{q^{s+n/2}}, D a field index or "all"
//   u4[:D]         x^q + x^{q^3} + delta x^{q^5}; first root of d^2 + d = 1 if D is omitted
//   u5[:H]         first h with h^{q^3+1} = -1 if H is omitted
//   poly:[c0,...]  explicit coefficients as field indices

#include "linset/field.hpp"
#include "linset/linear_set.hpp"
#include "linset/linpoly.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace linset::app {

struct PolyTarget {
  std::string label;
  LinPoly poly;
  // Only for family descriptors.
  std::optional<KnownFamily> family;
};

/// A descriptor expands to several targets when it asks for a delta sweep.
std::vector<PolyTarget> parse_poly(const FieldCtx& F, std::string_view text);

std::vector<unsigned> parse_uint_list(std::string_view text);

/// Three comma separated integers p,e,t.
FieldSpec parse_field_triple(std::string_view text);

/// Whitespace or comma separated coefficients c_0 .. c_{e n} of a monic modulus.
std::vector<std::uint32_t> read_modulus_file(const std::filesystem::path& path);

}  // namespace linset::app
