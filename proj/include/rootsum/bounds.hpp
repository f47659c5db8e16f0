#pragma once

// Closed-form tails [n0, inf) contained in W_p(m), with the case split on
// m0 = gcd(p-1, m) and the exceptional configurations where the generic tail
// has to be moved up by one.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rootsum/error.hpp"
#include "rootsum/weights.hpp"

namespace rootsum {

enum class GcdClass { GE3, EQ2, EQ1 };

enum class BoundException {
  None,
  /// m0 = 2, p = 3 and m = 3^k - 1: the index d itself is not a weight.
  TernaryFullIndex,
  /// m0 = 1 and d' = p - 1.
  IndexIsPMinusOne,
  /// m0 = 1, p = 2, d' = 3, m' = 5.
  BinaryFive,
};

struct CaseClass {
  GcdClass gcd_class = GcdClass::GE3;
  BoundException exception = BoundException::None;
  friend bool operator==(const CaseClass&, const CaseClass&) = default;
};

enum class BoundKind {
  /// d + 1, for any field of degree k holding G (m >= 3, or m = 2 with k >= 2).
  UniformIndex,
  /// d0 + 1 from the m0-th roots of unity inside F_p.
  SubfieldRoots,
  /// d + 1 via d0 | d.
  SubfieldIndex,
  /// d, or d + 1 in the ternary exception.
  EvenIndex,
  /// ell * ceil((p-1)/(t-1)) from sumsets of the trace set.
  TraceSumset,
  /// ell * (p-1), the same with t replaced by its lower bound 2.
  TraceSumsetWeak,
  /// d', or d' + 1 in the exceptions; a tail of W_p(m') and hence of W_p(m).
  MinimalFieldIndex,
  /// d, or d + 1 in the exceptions.
  CoprimeIndex,
  /// 2*ell*ell' or ell*ell' for m an odd prime with p of order (m-1)/2.
  QuadraticCharacter,
};

std::string_view to_string(GcdClass c);
std::string_view to_string(BoundException e);
std::string_view to_string(BoundKind k);

struct Prediction {
  BoundKind kind;
  /// nullopt when the input it needs (the trace set) was beyond the field cap.
  std::optional<std::uint64_t> tail;
};

struct BoundReport {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  unsigned k = 0;
  std::uint64_t d = 0;
  std::uint64_t m0 = 0;
  std::uint64_t d0 = 0;
  std::uint64_t ell = 0;
  std::uint64_t m_prime = 0;
  std::uint64_t d_prime = 0;
  /// (p^{ell-1} + ... + p + 1) / m', integral in class EQ1 only.
  std::optional<std::uint64_t> s;
  /// |tr(H)|, filled in class EQ1 when the trace field fits the cap.
  std::optional<std::uint64_t> t;
  CaseClass case_class;
  std::vector<Prediction> predictions;
  std::uint64_t best = 0;
};

/// Requires p prime, m >= 3, gcd(p, m) = 1, m | p^k - 1.
CaseClass classify(std::uint64_t p, std::uint64_t m, unsigned k);

/// Every applicable tail for the triple (also m = 2 with k >= 2, which only
/// carries the uniform bound).
BoundReport predicted_tails(std::uint64_t p, std::uint64_t m, unsigned k, const Limits& limits = {});

/// Np + N*ell when m = ell^a, ell != p prime, and the m-th cyclotomic
/// polynomial stays irreducible mod p; HypothesisFails otherwise.
WeightSet prime_power_weight_set(std::uint64_t p, std::uint64_t m);

/// (a-1)(b-1), the least n0 with [n0, inf) inside Na + Nb.
std::uint64_t semigroup_tail(std::uint64_t a, std::uint64_t b);

}  // namespace rootsum
