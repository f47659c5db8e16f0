#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "rootsum/arith.hpp"
#include "rootsum/cyclotomic.hpp"
#include "rootsum/weights.hpp"

using namespace rootsum;

namespace {

// {finite members} plus every n >= tail.
void expect_weights(std::uint64_t p, std::uint64_t m, std::vector<std::uint64_t> finite,
                    std::uint64_t tail) {
  const auto ws = compute_weight_set(p, m);
  for (std::uint64_t n = 0; n < tail + 3 * p + 20; ++n) {
    const bool want = n >= tail || std::count(finite.begin(), finite.end(), n) > 0;
    EXPECT_EQ(ws.contains(n), want) << "W_" << p << "(" << m << ") at " << n;
  }
  EXPECT_EQ(ws.tail_start, tail);
}

}  // namespace

TEST(Weights, GoldenSets) {
  expect_weights(11, 5, {0}, 3);
  expect_weights(5, 2, {0, 2}, 4);
  expect_weights(5, 4, {0}, 2);
  expect_weights(31, 3, {0, 3, 6, 7}, 9);
  expect_weights(2, 73, {0}, 2);
  expect_weights(5, 3, {0, 3, 5, 6}, 8);
  expect_weights(2, 5, {0, 2}, 4);
  expect_weights(13, 4, {0, 2}, 4);
}

TEST(Weights, SmallExamples) {
  const auto w311 = compute_weight_set(3, 11);
  for (std::uint64_t n : {5, 6, 8, 9}) EXPECT_TRUE(membership(w311, n));
  const auto w511 = compute_weight_set(5, 11);
  for (std::uint64_t n : {5, 7, 9}) EXPECT_TRUE(membership(w511, n));
  for (std::uint64_t n = 10; n < 60; ++n) {
    EXPECT_TRUE(w311.contains(n));
    EXPECT_TRUE(w511.contains(n));
  }
  EXPECT_FALSE(compute_weight_set(2, 5).contains(3));
  EXPECT_FALSE(compute_weight_set(13, 4).contains(3));
  EXPECT_TRUE(compute_weight_set(13, 4).contains(4));
}

TEST(Weights, TrivialGroup) {
  const auto ws = compute_weight_set(7, 1);
  EXPECT_EQ(ws.period, 7u);
  for (std::uint64_t n = 0; n < 100; ++n) EXPECT_EQ(ws.contains(n), n % 7 == 0);
  // p | m reduces to the p-free part.
  const auto w = compute_weight_set(3, 3 * 11);
  EXPECT_EQ(w.m_prime, 11u);
  for (std::uint64_t n = 0; n < 40; ++n) EXPECT_EQ(w.contains(n), compute_weight_set(3, 11).contains(n));
}

TEST(Weights, Invariants) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::uint64_t m = 2; m <= 30; ++m) {
      if (m % p == 0 || !checked_pow(p, splitting_degree(p, m), 1 << 16)) continue;
      const auto a = analyze_weights(p, m);
      const auto& ws = a.weights;
      EXPECT_TRUE(a.tower.monotone());
      EXPECT_TRUE(ws.contains(0));
      EXPECT_EQ(ws.period, 1u);
      EXPECT_EQ(ws.bound, exploration_bound(p, ws.m_prime));
      for (auto x : ws.members_below)
        for (auto y : ws.members_below)
          if (x + y < ws.bound) EXPECT_TRUE(ws.contains(x + y));
      // Np + sum of N r over prime divisors r of m.
      for (auto r : prime_divisors(m))
        for (std::uint64_t i = 0; i < 5; ++i)
          for (std::uint64_t j = 0; j < 5; ++j) EXPECT_TRUE(ws.contains(i * p + j * r));
      // The tail is confirmed layer by layer, not only by the rule.
      for (auto n = ws.tail_start; n <= a.tower.height(); ++n) EXPECT_TRUE(a.tower.vanishes(n));
      EXPECT_GE(a.tower.height(), ws.tail_start + 2 * p);
    }
  }
}

TEST(Weights, MatchesElementSetOracle) {
  // Every (p, m) whose splitting field has at most 2^10 elements, p <= 31.
  for (std::uint64_t p = 2; p <= 31; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (unsigned k = 1; oracle::ipow(p, k) <= 1024; ++k) {
      const auto q = oracle::ipow(p, k);
      for (auto m : divisors(q - 1)) {
        if (oracle::order_mod(p, m) != k) continue;
        const auto ws = compute_weight_set(p, m);
        const auto horizon = 2 * ws.bound;
        const auto ref = oracle::weights(p, m, horizon);
        for (std::uint64_t n = 0; n <= horizon; ++n)
          ASSERT_EQ(ws.contains(n), ref[n]) << "W_" << p << "(" << m << ") at " << n;
      }
    }
  }
}

TEST(Weights, Certificates) {
  const auto a = analyze_weights(11, 5);
  const auto cert = extract_certificate(a, 3);
  const auto& f = a.tower.field();
  std::vector<std::uint64_t> residues;
  for (auto e : cert.exponents) residues.push_back(*f.residue(a.tower.roots().root(e)));
  std::sort(residues.begin(), residues.end());
  EXPECT_EQ(residues, (std::vector<std::uint64_t>{1, 1, 9}));

  const auto c = certificate(7, 3, 7);
  EXPECT_EQ(c.exponents.size(), 7u);

  EXPECT_THROW(certificate(2, 5, 3), Error);
  try {
    certificate(2, 5, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAMember);
  }

  const auto a73 = analyze_weights(2, 73);
  for (std::uint64_t n : {2, 3, 4, 5, 17, 100, 1001}) {
    const auto cn = extract_certificate(a73, n);
    ASSERT_EQ(cn.exponents.size(), n);
    EXPECT_TRUE(std::is_sorted(cn.exponents.begin(), cn.exponents.end()));
    EXPECT_TRUE(evaluate_exponents(a73.tower, cn.exponents).is_zero());
  }
}

TEST(Weights, CertificatesAlwaysVanish) {
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {2, 3}, {2, 7}, {3, 13}, {5, 3}, {5, 11}, {7, 19}, {13, 4}, {31, 3}, {3, 11}}) {
    const auto a = analyze_weights(p, m);
    for (std::uint64_t n = 0; n < 3 * a.weights.bound; ++n) {
      if (!a.weights.contains(n)) continue;
      const auto c = extract_certificate(a, n);
      ASSERT_EQ(c.exponents.size(), n);
      EXPECT_TRUE(evaluate_exponents(a.tower, c.exponents).is_zero()) << p << " " << m << " " << n;
    }
  }
}

TEST(Weights, MinimalSums) {
  using Sums = std::vector<std::vector<std::uint64_t>>;
  EXPECT_EQ(minimal_vanishing_sums(2, 3, 5), (Sums{{0, 0}, {0, 1, 2}}));
  EXPECT_EQ(minimal_vanishing_sums(3, 5, 7), (Sums{{0, 0, 0}, {0, 1, 2, 3, 4}}));
  EXPECT_EQ(minimal_vanishing_sums(2, 5, 7), (Sums{{0, 0}, {0, 1, 2, 3, 4}}));
  EXPECT_EQ(minimal_vanishing_sums(5, 1, 5), (Sums{{0, 0, 0, 0, 0}}));

  // 1 + 1 + 9 = 0 in F_11 with 9 = zeta^3 for zeta = 4.
  const auto s = minimal_vanishing_sums(11, 5, 3);
  EXPECT_NE(std::find(s.begin(), s.end(), std::vector<std::uint64_t>{0, 0, 3}), s.end());

  Limits tight;
  tight.enumeration_cap = 4;
  EXPECT_THROW(minimal_vanishing_sums(2, 3, 5, tight), Error);
}

TEST(Weights, MinimalSumsHaveNoVanishingSubsum) {
  for (auto [p, m, w] : std::vector<std::tuple<std::uint64_t, std::uint64_t, unsigned>>{
           {2, 7, 8}, {3, 4, 6}, {5, 6, 6}, {11, 5, 5}, {7, 3, 8}}) {
    const auto a = analyze_weights(p, m);
    const auto sums = minimal_vanishing_sums(p, m, w);
    EXPECT_FALSE(sums.empty());
    for (const auto& s : sums) {
      EXPECT_TRUE(evaluate_exponents(a.tower, s).is_zero());
      ASSERT_LT(s.size(), 20u);
      for (std::uint32_t mask = 1; mask + 1 < (1u << s.size()); ++mask) {
        std::vector<std::uint64_t> sub;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (mask >> i & 1) sub.push_back(s[i]);
        EXPECT_FALSE(evaluate_exponents(a.tower, sub).is_zero());
      }
    }
  }
}
