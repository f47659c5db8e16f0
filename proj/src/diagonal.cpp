#include "rootsum/diagonal.hpp"

#include <numeric>

#include "rootsum/arith.hpp"

namespace rootsum {

ReducedExponent reduce_exponent(std::uint64_t q, std::uint64_t e) {
  if (q < 2) throw Error(ErrorKind::PreconditionViolated, "field order must be >= 2");
  if (e < 1) throw Error(ErrorKind::PreconditionViolated, "exponent must be >= 1");
  const auto d = std::gcd(q - 1, e);
  return {d, (q - 1) / d};
}

DiagonalInstance make_instance(std::shared_ptr<const FieldTable> field, std::uint64_t e,
                               std::uint64_t n) {
  const auto red = reduce_exponent(field->order(), e);
  return {std::move(field), e, red.d, red.m, n};
}

bool is_good_solution(const FieldTable& field, std::uint64_t e, const GoodSolution& sol) {
  Element sum = Element::zero();
  for (auto x : sol.values) {
    if (x.is_zero()) return false;
    sum = field.add(sum, field.pow(x, static_cast<std::int64_t>(e)));
  }
  return sum.is_zero();
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  return powmod(a % m, euler_phi(m) - 1, m);
}

}  // namespace

DiagonalSolver::DiagonalSolver(std::shared_ptr<const FieldTable> field, std::uint64_t e)
    : e_(e),
      d_(reduce_exponent(field->order(), e).d),
      m_(field->units() / d_),
      lift_(inverse_mod(e / d_, m_)),
      analysis_(analyze_weights_in(std::move(field), m_)) {}

SolveResult DiagonalSolver::solve(std::uint64_t n) const {
  SolveResult result;
  result.d = d_;
  result.m = m_;
  result.evidence = analysis_.weights;
  if (!analysis_.weights.contains(n)) return result;

  const auto cert = extract_certificate(analysis_, n);
  GoodSolution sol;
  sol.values.reserve(cert.exponents.size());
  const auto units = field().units();
  for (auto j : cert.exponents)
    sol.values.push_back(Element::from_log(static_cast<std::uint32_t>(mulmod(j, lift_, units))));
  if (!is_good_solution(field(), e_, sol))
    throw Error(ErrorKind::InternalMismatch, "constructed solution does not vanish");
  result.status = SolveStatus::Solved;
  result.solution = std::move(sol);
  return result;
}

SolveResult solve_good(const DiagonalInstance& inst) {
  return DiagonalSolver(inst.field, inst.e).solve(inst.n);
}

std::shared_ptr<const FieldTable> field_of_order(
    std::uint64_t q, const std::optional<std::vector<std::uint64_t>>& modulus_coeffs,
    const Limits& limits) {
  const auto p = q >= 2 ? prime_power_base(q) : std::nullopt;
  if (!p) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  unsigned k = 0;
  for (auto r = q; r > 1; r /= *p) ++k;
  std::optional<PrimePoly> modulus;
  if (modulus_coeffs) modulus = PrimePoly(*p, *modulus_coeffs);
  return std::make_shared<const FieldTable>(build_field(*p, k, modulus, limits));
}

SolveResult witt_quadratic_check(std::uint64_t q, std::uint64_t n, const Limits& limits) {
  if (q <= 5 || q % 2 == 0)
    throw Error(ErrorKind::PreconditionViolated, "q must be an odd prime power > 5");
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "n must be >= 2");
  return DiagonalSolver(field_of_order(q, std::nullopt, limits), 2).solve(n);
}

}  // namespace rootsum
