#pragma once

// All-nonzero ("good") solutions of x_1^e + ... + x_n^e = 0 over F_q.
//
// With d = gcd(q-1, e) and m = (q-1)/d the nonzero e-th powers are exactly the
// m-th roots of unity, so a good solution in n variables exists iff n lies in
// W_p(m). Solutions are read off a vanishing-sum certificate.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rootsum/error.hpp"
#include "rootsum/gf.hpp"
#include "rootsum/weights.hpp"

namespace rootsum {

struct ReducedExponent {
  std::uint64_t d = 0;
  std::uint64_t m = 0;
};

/// d = gcd(q-1, e), m = (q-1)/d.
ReducedExponent reduce_exponent(std::uint64_t q, std::uint64_t e);

struct DiagonalInstance {
  std::shared_ptr<const FieldTable> field;
  std::uint64_t e = 0;
  std::uint64_t d = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
};

DiagonalInstance make_instance(std::shared_ptr<const FieldTable> field, std::uint64_t e,
                               std::uint64_t n);

struct GoodSolution {
  std::vector<Element> values;
};

enum class SolveStatus { Solved, NoSolution };

struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  std::uint64_t d = 0;
  std::uint64_t m = 0;
  std::optional<GoodSolution> solution;
  /// The exact weight set that decided the answer.
  WeightSet evidence;
};

/// True iff every value is nonzero and the e-th powers sum to zero.
bool is_good_solution(const FieldTable& field, std::uint64_t e, const GoodSolution& sol);

/// Reusable solver for one (field, exponent) pair; the sumset layers are
/// computed once and shared by every n.
class DiagonalSolver {
 public:
  DiagonalSolver(std::shared_ptr<const FieldTable> field, std::uint64_t e);

  std::uint64_t exponent() const { return e_; }
  std::uint64_t d() const { return d_; }
  std::uint64_t m() const { return m_; }
  const WeightSet& weights() const { return analysis_.weights; }
  const FieldTable& field() const { return analysis_.tower.field(); }

  SolveResult solve(std::uint64_t n) const;

 private:
  std::uint64_t e_;
  std::uint64_t d_;
  std::uint64_t m_;
  /// Inverse of e/d modulo m: maps a root exponent j to x = g^(j * lift).
  std::uint64_t lift_;
  WeightAnalysis analysis_;
};

SolveResult solve_good(const DiagonalInstance& inst);

/// F_q for a prime power q, with an optional modulus.
std::shared_ptr<const FieldTable> field_of_order(std::uint64_t q,
                                                 const std::optional<std::vector<std::uint64_t>>&
                                                     modulus_coeffs = std::nullopt,
                                                 const Limits& limits = {});

/// x_1^2 + ... + x_n^2 = 0 over F_q, q odd and > 5. Solvable for every n >= 3;
/// n = 2 is passed through and solvable iff q = 1 mod 4.
SolveResult witt_quadratic_check(std::uint64_t q, std::uint64_t n, const Limits& limits = {});

}  // namespace rootsum
