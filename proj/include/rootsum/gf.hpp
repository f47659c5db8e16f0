#pragma once

// Prime fields F_p and extensions F_{p^k} in discrete-log representation.
//
// A FieldTable fixes a monic irreducible modulus f and a primitive element g.
// Nonzero elements are stored as exponents of g; addition goes through the
// Zech table Z with g^Z(i) = 1 + g^i. Elements also have a dense integer
// "code": the coefficient vector of their polynomial form read as a base-p
// number, constant term least significant.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rootsum/error.hpp"

namespace rootsum {

/// Polynomial over F_p, lowest degree first, no trailing zeros.
class PrimePoly {
 public:
  explicit PrimePoly(std::uint64_t p, std::vector<std::uint64_t> coeffs = {});

  static PrimePoly constant(std::uint64_t p, std::uint64_t c);
  static PrimePoly monomial(std::uint64_t p, std::size_t degree, std::uint64_t c = 1);

  std::uint64_t prime() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  PrimePoly monic() const;

  /// Descending form with residues in [0, p-1], e.g. "X^5+X^4+2X^3+X^2+2".
  std::string to_string() const;

  friend bool operator==(const PrimePoly&, const PrimePoly&) = default;
  friend PrimePoly operator+(const PrimePoly& a, const PrimePoly& b);
  friend PrimePoly operator-(const PrimePoly& a, const PrimePoly& b);
  friend PrimePoly operator*(const PrimePoly& a, const PrimePoly& b);
  friend PrimePoly operator%(const PrimePoly& a, const PrimePoly& b);

 private:
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> coeffs_;
};

struct PolyDivision {
  PrimePoly quotient;
  PrimePoly remainder;
};

PolyDivision divmod(const PrimePoly& a, const PrimePoly& b);
/// Monic gcd; gcd(0, 0) = 0.
PrimePoly gcd(PrimePoly a, PrimePoly b);
PrimePoly powmod(PrimePoly base, std::uint64_t exp, const PrimePoly& modulus);

/// Checks gcd(X^{p^i} - X, f) = 1 for i <= k/2 and X^{p^k} = X mod f.
bool is_irreducible(const PrimePoly& f);

/// Zero, or g^e with e in [0, q-2].
class Element {
 public:
  constexpr Element() = default;

  static constexpr Element zero() { return Element(); }
  static constexpr Element from_log(std::uint32_t log) { return Element(log); }

  constexpr bool is_zero() const { return log_ == kZero; }
  constexpr std::uint32_t log() const { return log_; }

  friend constexpr auto operator<=>(const Element&, const Element&) = default;

 private:
  static constexpr std::uint32_t kZero = std::numeric_limits<std::uint32_t>::max();
  constexpr explicit Element(std::uint32_t log) : log_(log) {}

  std::uint32_t log_ = kZero;
};

class FieldTable {
 public:
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  /// q - 1, the order of the multiplicative group.
  std::uint64_t units() const { return q_ - 1; }
  const PrimePoly& modulus() const { return modulus_; }
  const PrimePoly& generator_poly() const { return generator_; }

  Element one() const { return Element::from_log(0); }
  Element generator() const { return Element::from_log(q_ > 2 ? 1 : 0); }
  Element minus_one() const { return Element::from_log(minus_one_log_); }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::int64_t e) const;

  /// Image of the integer r under Z -> F_p -> F.
  Element from_residue(std::int64_t r) const;
  /// The residue if x lies in the prime subfield.
  std::optional<std::uint64_t> residue(Element x) const;

  std::uint32_t code(Element x) const { return x.is_zero() ? 0 : exp_to_code_[x.log()]; }
  Element from_code(std::uint32_t code) const;
  PrimePoly to_poly(Element x) const;
  /// Reduces modulo the field modulus first.
  Element from_poly(const PrimePoly& poly) const;

  /// Z(i), or nullopt at the unique i with g^i = -1.
  std::optional<std::uint32_t> zech(std::uint32_t i) const;

 private:
  friend FieldTable build_field(std::uint64_t, unsigned, const std::optional<PrimePoly>&,
                                const Limits&);
  FieldTable(std::uint64_t p, unsigned k, std::uint64_t q, PrimePoly modulus, PrimePoly generator)
      : p_(p), k_(k), q_(q), modulus_(std::move(modulus)), generator_(std::move(generator)) {}

  void build_tables();

  static constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  PrimePoly modulus_;
  PrimePoly generator_;
  std::uint32_t minus_one_log_ = 0;
  std::vector<std::uint32_t> exp_to_code_;
  std::vector<std::uint32_t> code_to_log_;
  std::vector<std::uint32_t> zech_;
};

/// Deterministic construction of F_{p^k}. Without an override the modulus is
/// the lexicographically least monic irreducible (coefficients compared from
/// the constant term up); the generator is the primitive element of least code.
FieldTable build_field(std::uint64_t p, unsigned k,
                       const std::optional<PrimePoly>& modulus_override = std::nullopt,
                       const Limits& limits = {});

/// x + x^p + ... + x^{p^{k-1}}, as a residue mod p.
std::uint64_t trace_to_prime(const FieldTable& field, Element x);

/// Least e >= 1 with a^e = 1 mod n.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// The m-th roots of unity <g^step>, step = (q-1)/m, as a bitset over
/// discrete-log indices.
struct RootGroup {
  std::uint64_t m = 0;
  std::uint64_t step = 0;
  boost::dynamic_bitset<> bits;

  Element zeta() const { return Element::from_log(static_cast<std::uint32_t>(step)); }
  /// zeta^j.
  Element root(std::uint64_t j) const {
    return Element::from_log(static_cast<std::uint32_t>((j % m) * step));
  }
  bool contains(Element x) const { return !x.is_zero() && bits.test(x.log()); }
  std::size_t size() const { return bits.count(); }
};

RootGroup roots_of_unity(const FieldTable& field, std::uint64_t m);

}  // namespace rootsum
