#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rootsum {

enum class ErrorKind {
  NotPrime,
  SizeCapExceeded,
  OverrideNotIrreducible,
  DivisionByZero,
  NotCoprime,
  DoesNotDivide,
  NotAMember,
  EnumerationCapExceeded,
  PreconditionViolated,
  HypothesisFails,
  NotOddPrime,
  InternalMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Resource limits shared by every operation that builds a field or enumerates.
struct Limits {
  std::uint64_t field_cap = std::uint64_t{1} << 22;
  unsigned enumeration_cap = 12;
  /// Search-node budget for minimal vanishing sum enumeration.
  std::uint64_t enumeration_nodes = 50'000'000;
};

}  // namespace rootsum
