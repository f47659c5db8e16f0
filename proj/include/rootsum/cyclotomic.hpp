#pragma once

// Cyclotomic cosets of p acting on Z/m and the factorization of X^m - 1 over
// F_p they index.

#include <cstdint>
#include <string>
#include <vector>

#include "rootsum/error.hpp"
#include "rootsum/gf.hpp"

namespace rootsum {

struct CyclotomicCoset {
  std::uint64_t m = 0;
  std::uint64_t rep = 0;
  /// Sorted; {rep * p^j mod m}.
  std::vector<std::uint64_t> members;
};

struct CyclotomicFactor {
  PrimePoly poly;
  unsigned degree = 0;
  /// Negated coefficient of X^{degree-1}, i.e. the sum of the factor's roots.
  std::uint64_t trace_coeff = 0;
};

struct FactorizationReport {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  /// Sorted by (degree, coefficients from the constant term up); includes X - 1.
  std::vector<CyclotomicFactor> factors;

  PrimePoly product() const;
  /// "(X-1)(X^5+X^4+2X^3+X^2+2)(...)"
  std::string pretty() const;
};

/// m with every factor of p removed.
std::uint64_t strip_p_part(std::uint64_t p, std::uint64_t m);

/// Partition of Z/m into orbits under multiplication by p, ordered by least member.
std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t p, std::uint64_t m);

/// Factors X^m - 1 over F_p by multiplying out (X - zeta^j) over each coset
/// inside the splitting field.
FactorizationReport factor_xm_minus_1(std::uint64_t p, std::uint64_t m, const Limits& limits = {});

/// Least e >= 1 with gcd(p^e - 1, m) > 1, computed as the least order of p
/// modulo a prime divisor of m.
std::uint64_t ell_of(std::uint64_t p, std::uint64_t m);

/// Same quantity by direct search over e.
std::uint64_t ell_by_definition(std::uint64_t p, std::uint64_t m);

/// Whether the m-th cyclotomic polynomial stays irreducible mod p, i.e.
/// ord_m(p) = phi(m).
bool phi_m_irreducible_mod_p(std::uint64_t p, std::uint64_t m);

/// Degree of the smallest extension of F_p containing all m-th roots of unity
/// (m coprime to p); 1 when m = 1.
unsigned splitting_degree(std::uint64_t p, std::uint64_t m);

}  // namespace rootsum
