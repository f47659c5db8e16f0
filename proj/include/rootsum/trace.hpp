#pragma once

// Trace sets T = tr(H), where H is the group of m'-th roots of unity in the
// smallest field L = F_{p^ell} holding a nontrivial m-th root of unity and
// m' = gcd(p^ell - 1, m).

#include <cstdint>
#include <vector>

#include "rootsum/error.hpp"

namespace rootsum {

struct TraceProfile {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t ell = 0;
  std::uint64_t m_prime = 0;
  /// Number of irreducible factors of X^{m'} - 1 other than X - 1.
  std::uint64_t r = 0;
  /// Distinct traces, residues in [0, p-1], sorted.
  std::vector<std::uint64_t> trace_set;
  std::uint64_t t = 0;
  /// ell mod p followed by the trace coefficient of each nontrivial factor,
  /// duplicates kept.
  std::vector<std::uint64_t> factor_traces;
};

/// Computes T directly as {tr(h) : h in H} and again from the factors of
/// X^{m'} - 1; throws InternalMismatch if the two disagree.
TraceProfile trace_profile(std::uint64_t p, std::uint64_t m, const Limits& limits = {});

/// q if q = 1 mod 4, else -q.
struct QStar {
  std::uint64_t q = 0;
  std::int64_t value = 0;
};

QStar q_star(std::uint64_t q);

/// For odd primes p != q with p of order (q-1)/2 mod q, the trace set of the
/// q-th roots of unity has 2 elements if p | q* - 1 and 3 otherwise.
unsigned quadratic_trace_count(std::uint64_t p, std::uint64_t q);

/// Tail ell * ceil((p-1)/(t-1)) with the count above: 2*ell*ell' when p | q* - 1,
/// else ell*ell', where ell = (q-1)/2 and ell' = (p-1)/2.
std::uint64_t quadratic_trace_tail(std::uint64_t p, std::uint64_t q);

/// Whether the hypothesis of the two functions above holds.
bool quadratic_trace_applies(std::uint64_t p, std::uint64_t q);

}  // namespace rootsum
