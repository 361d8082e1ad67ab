#pragma once

/**
 * Arithmetic in the tower GF(p) < GF(q) < GF(q^t) < GF(q^n), q = p^e, n = 2t.
 *
 * Elements are opaque `Felt` handles owned by a `FieldCtx`. Two backends exist:
 *
 *  - Table: the handle stores 1 + log_w(x) for a fixed generator w (0 encodes
 *    zero). Multiplication and Frobenius are integer arithmetic modulo q^n - 1,
 *    addition goes through a Zech logarithm table. Used up to 2^26 elements.
 *  - Polynomial: the handle stores the polynomial-basis index of x and every
 *    operation works on GF(p) coefficient vectors. Used above the table limit.
 *
 * Both backends encode zero as the default-constructed `Felt{}` and compare
 * elements by handle. The external serialization is always the polynomial-basis
 * index sum_i c_i p^i of x = sum_i c_i X^i mod the defining modulus.
 *
 * A FieldCtx is immutable after construction and may be shared across threads.
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace linset {

struct FieldSpec {
  std::uint32_t p = 3;
  std::uint32_t e = 1;
  std::uint32_t t = 3;
  /// c_0..c_{e*n}, monic. Empty selects the default modulus.
  std::vector<std::uint32_t> modulus;
};

enum class Backend { Automatic, Table, Polynomial };

class Felt {
 public:
  constexpr Felt() = default;

  constexpr std::uint64_t raw() const { return raw_; }
  constexpr bool is_zero() const { return raw_ == 0; }

  friend constexpr bool operator==(Felt, Felt) = default;
  friend constexpr auto operator<=>(Felt, Felt) = default;

 private:
  friend class FieldCtx;
  constexpr explicit Felt(std::uint64_t r) : raw_(r) {}
  std::uint64_t raw_ = 0;
};

class FieldCtx {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 26;
  static constexpr std::uint64_t kSizeLimit = std::uint64_t{1} << 40;
  static constexpr unsigned kMaxDegree = 40;

  explicit FieldCtx(const FieldSpec& spec, Backend backend = Backend::Automatic);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  /// The spec with the modulus actually in use filled in.
  const FieldSpec& spec() const { return spec_; }
  Backend backend() const { return backend_; }

  std::uint32_t p() const { return spec_.p; }
  std::uint32_t e() const { return spec_.e; }
  unsigned t() const { return spec_.t; }
  unsigned n() const { return 2 * spec_.t; }
  /// Degree of GF(q^n) over GF(p).
  unsigned degree() const { return degree_; }
  std::uint64_t q() const { return q_; }
  /// |GF(q^n)|.
  std::uint64_t order() const { return order_; }

  Felt zero() const { return Felt{}; }
  Felt one() const { return one_; }
  /// Generator of the multiplicative group (smallest primitive index).
  Felt generator() const { return generator_; }
  /// Inverse of 2 in GF(p).
  Felt half() const { return half_; }

  Felt from_index(std::uint64_t index) const;
  std::uint64_t to_index(Felt x) const;
  /// Image of an integer in the prime field.
  Felt from_int(std::int64_t v) const;

  /// GF(p) coordinates of x in the basis 1, X, ..., X^{degree-1}.
  void coords(Felt x, std::span<std::uint32_t> out) const;
  Felt from_coords(std::span<const std::uint32_t> c) const;

  Felt add(Felt a, Felt b) const;
  Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }
  Felt neg(Felt a) const;
  Felt mul(Felt a, Felt b) const;
  Felt inv(Felt a) const;
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
  Felt pow(Felt a, std::uint64_t exp) const;

  /// x^{q^j}; j is reduced modulo n, negative j allowed.
  Felt frob(Felt x, std::int64_t j) const;
  /// x^{p^j}; j is reduced modulo degree().
  Felt frob_p(Felt x, std::int64_t j) const;

  /// w^i for the fixed generator w.
  Felt generator_power(std::uint64_t i) const;
  /// Deterministic enumeration: 0 -> zero, i >= 1 -> w^{i-1}.
  Felt element_at(std::uint64_t i) const {
    return i == 0 ? zero() : generator_power(i - 1);
  }
  /// Multiplicative order of a nonzero element.
  std::uint64_t mult_order(Felt a) const;

  /// True iff x lies in GF(q^level), i.e. x^{q^level} = x.
  bool in_subfield(Felt x, unsigned level) const { return frob(x, level) == x; }

 private:
  struct PolyArith;

  Felt table_add(Felt a, Felt b) const;

  FieldSpec spec_;
  Backend backend_;
  unsigned degree_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t order_ = 0;
  std::uint64_t group_order_ = 0;  // order_ - 1
  Felt one_{}, generator_{}, half_{}, minus_one_{};

  std::shared_ptr<const PolyArith> poly_;
  // Table backend
  std::vector<std::uint32_t> exp_;   // exp_[i] = index(w^i)
  std::vector<std::uint32_t> log_;   // log_[index] = i
  std::vector<std::uint32_t> zech_;  // zech_[d] = raw(1 + w^d)
  std::vector<std::uint64_t> frob_mult_;    // q^j mod (order - 1), j < n
  std::vector<std::uint64_t> frob_p_mult_;  // p^j mod (order - 1), j < degree
};

/// Validates the spec (odd prime p, t >= 3, irreducible modulus) and builds the tables.
std::shared_ptr<const FieldCtx> build_field(const FieldSpec& spec, Backend backend = Backend::Automatic);

/// Tr_{q^n/q^level}(x). `level` must divide n.
Felt trace(const FieldCtx& F, Felt x, unsigned level);
/// N_{q^n/q^level}(x) = x^{(q^n-1)/(q^level-1)}. `level` must divide n.
Felt norm(const FieldCtx& F, Felt x, unsigned level);

/// x + x^{q^t} = 0.
bool in_W(const FieldCtx& F, Felt x);

/// Decomposition x = fixed + anti with fixed in GF(q^t) and anti in W.
struct Split {
  Felt fixed;
  Felt anti;
};
Split split(const FieldCtx& F, Felt x);

/// First x in W \ {0} (generator-power order) with x^{q^k + 1} = 1.
std::optional<Felt> w_unity_root_exists(const FieldCtx& F, unsigned k);

}  // namespace linset
