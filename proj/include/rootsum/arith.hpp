#pragma once

// Small-integer number theory used throughout: primality, factoring by trial
// division, modular powers and overflow-checked integer powers.

#include <cstdint>
#include <optional>
#include <vector>

namespace rootsum {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order. prime_divisors(1) is empty.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

/// base^exp, or nullopt if the result exceeds `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit = UINT64_MAX);

/// If n = l^a with l prime and a >= 1, returns l.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b);

}  // namespace rootsum
