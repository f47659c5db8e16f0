#pragma once

// Exact weight sets W_p(m): the weights n for which some n m-th roots of unity
// in characteristic p sum to zero.
//
// The engine iterates sumsets n*G of the root group G inside a concrete field.
// Every layer n*G is stable under multiplication by G, so a layer is stored as
// a bitset over the d = (q-1)/m cosets of G plus a flag for zero. Stepping a
// layer uses a precomputed table: coset c of g^c reaches the cosets of
// g^c + zeta^j, and reaches zero exactly when -g^c lies in G.

#include <cstdint>
#include <memory>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rootsum/error.hpp"
#include "rootsum/gf.hpp"

namespace rootsum {

/// n*G, stored as a union of G-cosets plus a zero flag.
struct SumsetLayer {
  std::size_t n = 0;
  boost::dynamic_bitset<> cosets;
  bool has_zero = false;

  /// Number of field elements in the layer.
  std::uint64_t size(std::uint64_t m) const { return cosets.count() * m + (has_zero ? 1 : 0); }
  bool is_subset_of(const SumsetLayer& other) const {
    return cosets.is_subset_of(other.cosets) && (!has_zero || other.has_zero);
  }
};

class SumsetTower {
 public:
  /// G = the m-th roots of unity of `field`; m must divide q - 1.
  SumsetTower(std::shared_ptr<const FieldTable> field, std::uint64_t m);

  const FieldTable& field() const { return *field_; }
  const std::shared_ptr<const FieldTable>& field_ptr() const { return field_; }
  const RootGroup& roots() const { return roots_; }
  std::uint64_t coset_count() const { return roots_.step; }

  /// Computes layers up to and including n.
  void extend_to(std::size_t n);
  std::size_t height() const { return layers_.size() - 1; }
  const SumsetLayer& layer(std::size_t n) const { return layers_.at(n); }

  bool contains(std::size_t n, Element x) const;
  bool vanishes(std::size_t n) const { return layer(n).has_zero; }

  /// Nondecreasing exponents j_1..j_n with sum of zeta^{j_i} equal to target.
  /// Backtracks from layer n, trying the least exponent first at each step.
  std::vector<std::uint64_t> decompose(std::size_t n, Element target) const;

  /// layer(n + p) contains layer(n) for every computed n.
  bool monotone() const;

 private:
  std::uint64_t coset_of(Element x) const { return x.log() % roots_.step; }

  std::shared_ptr<const FieldTable> field_;
  RootGroup roots_;
  // Coset c reaches transitions_[offsets_[c] .. offsets_[c+1]).
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> transitions_;
  std::uint64_t minus_one_coset_ = 0;
  std::vector<SumsetLayer> layers_;
};

struct WeightSet {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t m_prime = 0;
  /// Degree of the field the sumsets were computed in.
  unsigned k = 0;
  /// gcd of all members: 1 when m' >= 2, p when m' = 1.
  std::uint64_t period = 0;
  /// Exact members below `bound`, sorted.
  std::vector<std::uint64_t> members_below;
  /// Least n0 such that every multiple of `period` from n0 on is a member.
  std::uint64_t tail_start = 0;
  std::uint64_t bound = 0;

  bool contains(std::uint64_t n) const;
  friend bool operator==(const WeightSet&, const WeightSet&) = default;
};

bool membership(const WeightSet& ws, std::uint64_t n);

/// B = (p-1)(q_min-1) + p + 1 with q_min the least prime divisor of m', or
/// p + 1 when m' = 1. Everything past (p-1)(q_min-1) is already a member.
std::uint64_t exploration_bound(std::uint64_t p, std::uint64_t m_prime);

/// Field, sumset layers and the resulting weight set, kept together so
/// certificates can be read back out of the layers.
struct WeightAnalysis {
  SumsetTower tower;
  WeightSet weights;
};

/// Sumsets of the m-th roots of unity of a given field (m | q - 1).
WeightAnalysis analyze_weights_in(std::shared_ptr<const FieldTable> field, std::uint64_t m);

/// Sumsets in the splitting field of m' over F_p.
WeightAnalysis analyze_weights(std::uint64_t p, std::uint64_t m, const Limits& limits = {});

WeightSet compute_weight_set(std::uint64_t p, std::uint64_t m, const Limits& limits = {});

struct Certificate {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t m_prime = 0;
  std::uint64_t n = 0;
  /// Sorted exponents of zeta, a primitive m'-th root of unity (zeta = g^((q-1)/m')).
  std::vector<std::uint64_t> exponents;
};

/// Witness of weight n, read out of the analysis layers. Weights above the
/// computed height are reduced by multiples of p and padded with copies of 1.
Certificate extract_certificate(const WeightAnalysis& analysis, std::uint64_t n);

Certificate certificate(std::uint64_t p, std::uint64_t m, std::uint64_t n, const Limits& limits = {});

/// Sum of zeta^{e_i} for the exponents, evaluated in the tower's field.
Element evaluate_exponents(const SumsetTower& tower, const std::vector<std::uint64_t>& exponents);

/// Vanishing multisets of weight <= wmax with no vanishing proper sub-multiset,
/// one per rotation class (exponents shifted by a constant), each given as its
/// lexicographically least sorted rotation. Exponents refer to zeta as above.
std::vector<std::vector<std::uint64_t>> minimal_vanishing_sums(std::uint64_t p, std::uint64_t m,
                                                               unsigned wmax,
                                                               const Limits& limits = {});

}  // namespace rootsum
