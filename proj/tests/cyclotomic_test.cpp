#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "rootsum/arith.hpp"
#include "rootsum/cyclotomic.hpp"

using namespace rootsum;

namespace {

std::set<std::string> factor_strings(const FactorizationReport& rep) {
  std::set<std::string> out;
  for (const auto& f : rep.factors) out.insert(f.poly.to_string());
  return out;
}

PrimePoly xm_minus_1(std::uint64_t p, std::uint64_t m) {
  return PrimePoly::monomial(p, m) - PrimePoly::constant(p, 1);
}

}  // namespace

TEST(Cyclotomic, ElevenOverThree) {
  const auto rep = factor_xm_minus_1(3, 11);
  EXPECT_EQ(factor_strings(rep),
            (std::set<std::string>{"X+2", "X^5+X^4+2X^3+X^2+2", "X^5+2X^3+X^2+2X+2"}));
  EXPECT_EQ(rep.pretty(), "(X-1)(X^5+X^4+2X^3+X^2+2)(X^5+2X^3+X^2+2X+2)");
}

TEST(Cyclotomic, ElevenOverFive) {
  const auto rep = factor_xm_minus_1(5, 11);
  EXPECT_EQ(factor_strings(rep), (std::set<std::string>{"X+4", "X^5+2X^4+4X^3+X^2+X+4",
                                                        "X^5+4X^4+4X^3+X^2+3X+4"}));
}

TEST(Cyclotomic, NineteenOverSeven) {
  const auto rep = factor_xm_minus_1(7, 19);
  EXPECT_EQ(factor_strings(rep),
            (std::set<std::string>{"X+6", "X^3+2X+6", "X^3+4X^2+X+6", "X^3+4X^2+4X+6",
                                   "X^3+5X^2+6", "X^3+3X^2+3X+6", "X^3+6X^2+3X+6"}));
  for (const auto& f : rep.factors)
    if (f.degree == 3) EXPECT_EQ(f.trace_coeff, (7 - f.poly.coeff(2)) % 7);
}

TEST(Cyclotomic, ProductAndIrreducibility) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::uint64_t m = 1; m <= 40; ++m) {
      if (m % p == 0 || !checked_pow(p, splitting_degree(p, m), 1 << 20)) continue;
      const auto rep = factor_xm_minus_1(p, m);
      EXPECT_EQ(rep.product(), xm_minus_1(p, m)) << p << " " << m;
      const auto cosets = cyclotomic_cosets(p, m);
      ASSERT_EQ(rep.factors.size(), cosets.size());
      for (const auto& f : rep.factors) {
        EXPECT_TRUE(f.poly.is_monic());
        EXPECT_TRUE(is_irreducible(f.poly)) << f.poly.to_string();
      }
      // Canonical order: degree, then coefficients.
      for (std::size_t i = 1; i < rep.factors.size(); ++i) {
        const auto& a = rep.factors[i - 1];
        const auto& b = rep.factors[i];
        EXPECT_TRUE(a.degree < b.degree ||
                    (a.degree == b.degree && a.poly.coeffs() < b.poly.coeffs()));
      }
    }
  }
}

TEST(Cyclotomic, QuadraticFactorsHaveUnitConstant) {
  // ell = 2: nontrivial factors of X^{m'} - 1 are X^2 - aX + 1 with distinct a != 2.
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{5, 3}, {2, 3}, {7, 8}, {11, 12}, {13, 7}}) {
    const auto rep = factor_xm_minus_1(p, m);
    std::set<std::uint64_t> seen;
    for (const auto& f : rep.factors) {
      if (f.degree == 1) continue;
      ASSERT_EQ(f.degree, 2u);
      EXPECT_EQ(f.poly.coeff(0), 1u);
      EXPECT_NE(f.trace_coeff, 2 % p);
      EXPECT_TRUE(seen.insert(f.trace_coeff).second);
    }
  }
}

TEST(Cyclotomic, Cosets) {
  const auto c = cyclotomic_cosets(7, 19);
  ASSERT_EQ(c.size(), 7u);
  EXPECT_EQ(c[0].members, std::vector<std::uint64_t>{0});
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_EQ(c[i].members.size(), 3u);

  const auto c73 = cyclotomic_cosets(2, 73);
  ASSERT_EQ(c73.size(), 9u);
  for (std::size_t i = 1; i < c73.size(); ++i) EXPECT_EQ(c73[i].members.size(), 9u);

  EXPECT_EQ(cyclotomic_cosets(5, 1).size(), 1u);
  EXPECT_THROW(cyclotomic_cosets(3, 6), Error);
}

TEST(Cyclotomic, Ell) {
  EXPECT_EQ(ell_of(2, 73), 9u);
  EXPECT_EQ(ell_of(7, 19), 3u);
  EXPECT_EQ(ell_of(5, 3), 2u);
  EXPECT_EQ(ell_of(3, 11), 5u);
  for (std::uint64_t p : {2, 3, 5, 7, 23})
    for (std::uint64_t m = 2; m <= 200; ++m) {
      if (m % p == 0) continue;
      // Least e with gcd(p^e - 1, m) > 1, from the orders of p modulo prime divisors.
      std::uint64_t want = UINT64_MAX;
      for (auto r : prime_divisors(m)) want = std::min<std::uint64_t>(want, oracle::order_mod(p, r));
      EXPECT_EQ(ell_of(p, m), want);
      EXPECT_EQ(ell_by_definition(p, m), want);
    }
}

TEST(Cyclotomic, PhiIrreducible) {
  EXPECT_FALSE(phi_m_irreducible_mod_p(11, 5));
  EXPECT_TRUE(phi_m_irreducible_mod_p(2, 3));
  EXPECT_FALSE(phi_m_irreducible_mod_p(2, 73));
  EXPECT_TRUE(phi_m_irreducible_mod_p(2, 5));
  EXPECT_TRUE(phi_m_irreducible_mod_p(3, 5));
  EXPECT_TRUE(phi_m_irreducible_mod_p(13, 4) == false);
}

TEST(Cyclotomic, SplittingDegree) {
  EXPECT_EQ(splitting_degree(2, 73), 9u);
  EXPECT_EQ(splitting_degree(7, 19), 3u);
  EXPECT_EQ(splitting_degree(5, 1), 1u);
  EXPECT_EQ(strip_p_part(3, 54), 2u);
}
