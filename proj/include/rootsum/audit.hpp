#pragma once

// Sweep harness: recomputes weight sets exactly over a (p, m) range and checks
// every closed-form tail, exception, trace property and additive-combinatorics
// inequality against them. Failures are collected, never thrown.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootsum/bounds.hpp"
#include "rootsum/gf.hpp"
#include "rootsum/trace.hpp"
#include "rootsum/weights.hpp"

namespace rootsum {

/// Sorted distinct residues mod p.
using ResidueSet = std::vector<std::uint64_t>;

ResidueSet sumset(std::uint64_t p, const ResidueSet& a, const ResidueSet& b);

/// |A + B| >= min(p, |A| + |B| - 1).
bool cauchy_davenport_check(std::uint64_t p, const ResidueSet& a, const ResidueSet& b);

/// [1*A, 2*A, ..., count*A].
std::vector<ResidueSet> iterated_sumsets(std::uint64_t p, const ResidueSet& base, std::size_t count);

/// The inequality for every consecutive pair (n*A, A) with n < count.
bool cauchy_davenport_layers(std::uint64_t p, const ResidueSet& base, std::size_t count);

struct IndexCheck {
  std::uint64_t d = 0;
  std::uint64_t m = 0;
  std::uint64_t solved = 0;
  /// Weights in the window with no verified good solution.
  std::vector<std::uint64_t> failed;
  bool passed() const { return failed.empty(); }
};

/// For every divisor d of q-1 with m = (q-1)/d >= 3, or m = 2 and k >= 2:
/// solves x_1^d + ... + x_n^d = 0 with all x_i != 0 for n in [d+1, d+1+window].
std::vector<IndexCheck> verify_index_bound(const std::shared_ptr<const FieldTable>& field,
                                           std::uint64_t window);

struct AuditOptions {
  std::uint64_t p_max = 23;
  std::uint64_t m_max = 60;
  std::uint64_t field_cap = std::uint64_t{1} << 20;
  /// Width of the constructive window past d+1; 2p when unset.
  std::optional<std::uint64_t> window;
  /// Largest field order used for the constructive check.
  std::uint64_t solve_field_max = std::uint64_t{1} << 16;
};

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string detail;
  /// CLI invocation that recomputes the checked quantity.
  std::string reproduce;
};

enum class PairStatus { Checked, SkippedCap };

struct PairRecord {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  unsigned k_min = 0;
  PairStatus status = PairStatus::Checked;
  std::optional<WeightSet> weights;
  /// One report per field degree k = k_min, 2 k_min, ... within the cap.
  std::vector<BoundReport> bounds;
  std::optional<TraceProfile> trace;
  std::vector<CheckOutcome> checks;
};

struct FieldRecord {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  std::vector<IndexCheck> divisors;
};

struct Failure {
  std::string check;
  std::string detail;
  std::string reproduce;
};

struct AuditCounters {
  std::uint64_t pairs = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t checks = 0;
  std::uint64_t checks_passed = 0;
  std::uint64_t fields = 0;
  std::uint64_t solves = 0;
};

struct AuditReport {
  AuditOptions options;
  std::vector<PairRecord> pairs;
  std::vector<FieldRecord> fields;
  AuditCounters counters;
  std::vector<Failure> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

/// All checks for one (p, m) pair; m >= 3, gcd(p, m) = 1.
PairRecord audit_pair(std::uint64_t p, std::uint64_t m, std::uint64_t field_cap);

/// Constructive index check for F_{p^k}; failures go into `out`.
FieldRecord audit_field(std::uint64_t p, unsigned k, std::uint64_t window,
                        std::vector<Failure>& out);

AuditReport sweep(const AuditOptions& options);

}  // namespace rootsum
