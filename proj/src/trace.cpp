#include "rootsum/trace.hpp"

#include <algorithm>
#include <numeric>

#include "rootsum/arith.hpp"
#include "rootsum/cyclotomic.hpp"
#include "rootsum/gf.hpp"

namespace rootsum {

TraceProfile trace_profile(std::uint64_t p, std::uint64_t m, const Limits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  TraceProfile prof;
  prof.p = p;
  prof.m = m;
  prof.ell = ell_of(p, m);
  const auto p_ell = checked_pow(p, prof.ell, limits.field_cap);
  if (!p_ell)
    throw Error(ErrorKind::SizeCapExceeded,
                "F_" + std::to_string(p) + "^" + std::to_string(prof.ell) + " exceeds field cap");
  prof.m_prime = std::gcd(*p_ell - 1, m);

  const auto field = build_field(p, static_cast<unsigned>(prof.ell), std::nullopt, limits);
  const auto roots = roots_of_unity(field, prof.m_prime);
  std::vector<std::uint64_t> direct;
  for (std::uint64_t j = 0; j < roots.m; ++j) direct.push_back(trace_to_prime(field, roots.root(j)));
  std::sort(direct.begin(), direct.end());
  direct.erase(std::unique(direct.begin(), direct.end()), direct.end());

  const auto report = factor_xm_minus_1(p, prof.m_prime, limits);
  const PrimePoly x_minus_one(p, {p - 1, 1});
  prof.factor_traces.push_back(prof.ell % p);
  for (const auto& f : report.factors) {
    if (f.poly == x_minus_one) continue;
    prof.factor_traces.push_back(f.trace_coeff);
    ++prof.r;
  }
  auto via_factors = prof.factor_traces;
  std::sort(via_factors.begin(), via_factors.end());
  via_factors.erase(std::unique(via_factors.begin(), via_factors.end()), via_factors.end());

  if (direct != via_factors)
    throw Error(ErrorKind::InternalMismatch,
                "trace set disagrees with factor traces for p=" + std::to_string(p) +
                    ", m=" + std::to_string(m));
  prof.trace_set = std::move(direct);
  prof.t = prof.trace_set.size();
  return prof;
}

QStar q_star(std::uint64_t q) {
  if (q == 2 || !is_prime(q))
    throw Error(ErrorKind::NotOddPrime, std::to_string(q) + " is not an odd prime");
  const auto signed_q = static_cast<std::int64_t>(q);
  return {q, q % 4 == 1 ? signed_q : -signed_q};
}

bool quadratic_trace_applies(std::uint64_t p, std::uint64_t q) {
  if (p == 2 || !is_prime(p) || q == 2 || !is_prime(q) || p == q) return false;
  return multiplicative_order(p % q, q) == (q - 1) / 2;
}

unsigned quadratic_trace_count(std::uint64_t p, std::uint64_t q) {
  const auto star = q_star(q);
  if (!quadratic_trace_applies(p, q))
    throw Error(ErrorKind::HypothesisFails, "p=" + std::to_string(p) +
                                                " must be an odd prime of order (q-1)/2 mod q=" +
                                                std::to_string(q));
  const auto sp = static_cast<std::int64_t>(p);
  return (star.value - 1) % sp == 0 ? 2 : 3;
}

std::uint64_t quadratic_trace_tail(std::uint64_t p, std::uint64_t q) {
  const auto count = quadratic_trace_count(p, q);
  const auto ell = (q - 1) / 2;
  const auto ell_p = (p - 1) / 2;
  return count == 2 ? 2 * ell * ell_p : ell * ell_p;
}

}  // namespace rootsum
