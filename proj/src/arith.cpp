#include "rootsum/arith.hpp"

#include <algorithm>

#include "rootsum/error.hpp"

namespace rootsum {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::OverrideNotIrreducible: return "OverrideNotIrreducible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DoesNotDivide: return "DoesNotDivide";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f <= n / f; f += 2)
    if (n % f == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f <= n / f; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t f = 1; f <= n / f; ++f) {
    if (n % f != 0) continue;
    small.push_back(f);
    if (f != n / f) large.push_back(n / f);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto q : prime_divisors(n)) result = result / q * (q - 1);
  return result;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  if (n == 1) return 0;
  std::uint64_t result = 1;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
  }
  if (result > limit) return std::nullopt;
  return result;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto primes = prime_divisors(n);
  if (primes.size() != 1) return std::nullopt;
  return primes.front();
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace rootsum
