#pragma once

// Slow reference implementations for small fields. Nothing here uses the
// library: elements are coefficient vectors packed base p, multiplication is
// schoolbook reduction, irreducibility is trial division.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

/// Least k >= 1 with p^k = 1 mod m.
inline unsigned order_mod(u64 p, u64 m) {
  if (m == 1) return 1;
  u64 x = p % m;
  unsigned k = 1;
  while (x != 1) {
    x = x * p % m;
    ++k;
  }
  return k;
}

using Poly = std::vector<u64>;  // constant term first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& b, u64 p) {
  trim(a);
  const u64 lead = b.back();
  u64 inv = 1;
  while (lead * inv % p != 1) ++inv;
  while (a.size() >= b.size()) {
    const u64 c = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
    trim(a);
  }
  return a;
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p
/// digits of `index`, constant term least significant.
inline Poly monic_from_index(u64 p, unsigned deg, u64 index) {
  Poly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i, index /= p) f[i] = index % p;
  f[deg] = 1;
  return f;
}

inline bool irreducible_by_trial_division(const Poly& f, u64 p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d)
    for (u64 i = 0; i < ipow(p, d); ++i)
      if (poly_mod(f, monic_from_index(p, d, i), p).empty()) return false;
  return true;
}

/// Lexicographically least monic irreducible of degree k, comparing
/// coefficients from the constant term up.
inline Poly least_irreducible(u64 p, unsigned k) {
  const u64 count = ipow(p, k);
  // Enumerate with c0 most significant.
  for (u64 idx = 0; idx < count; ++idx) {
    Poly f(k + 1, 0);
    u64 r = idx;
    for (unsigned i = k; i-- > 0; r /= p) f[i] = r % p;
    f[k] = 1;
    if (irreducible_by_trial_division(f, p)) return f;
  }
  return {};
}

/// F_{p^k} with elements coded as base-p integers (constant term least significant).
class Field {
 public:
  Field(u64 p, unsigned k) : Field(p, least_irreducible(p, k)) {}
  Field(u64 p, Poly modulus) : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), f_(std::move(modulus)) {
    q_ = ipow(p_, k_);
  }

  u64 p() const { return p_; }
  unsigned k() const { return k_; }
  u64 q() const { return q_; }
  const Poly& modulus() const { return f_; }

  Poly unpack(u64 x) const {
    Poly a(k_, 0);
    for (unsigned i = 0; i < k_; ++i, x /= p_) a[i] = x % p_;
    return a;
  }
  u64 pack(const Poly& a) const {
    u64 x = 0;
    for (unsigned i = k_; i-- > 0;) x = x * p_ + (i < a.size() ? a[i] : 0);
    return x;
  }

  u64 add(u64 x, u64 y) const {
    u64 out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i, x /= p_, y /= p_, scale *= p_) out += ((x % p_ + y % p_) % p_) * scale;
    return out;
  }
  u64 mul(u64 x, u64 y) const {
    const auto a = unpack(x), b = unpack(y);
    Poly c(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
    return pack(poly_mod(c, f_, p_));
  }
  u64 pow(u64 x, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
  /// x + x^p + ... + x^{p^{k-1}}, which lies in F_p.
  u64 trace(u64 x) const {
    u64 s = 0, y = x;
    for (unsigned i = 0; i < k_; ++i, y = pow(y, p_)) s = add(s, y);
    return s;
  }

  /// All x with x^m = 1, by exhaustive search.
  std::vector<u64> roots_of_unity(u64 m) const {
    std::vector<u64> out;
    for (u64 x = 1; x < q_; ++x)
      if (pow(x, m) == 1) out.push_back(x);
    return out;
  }

 private:
  u64 p_;
  unsigned k_;
  Poly f_;
  u64 q_ = 0;
};

/// member[n] for n <= horizon: whether n m-th roots of unity in characteristic p
/// can sum to zero. Works in F_{p^k} with k = ord_m(p) using element sets.
inline std::vector<bool> weights(u64 p, u64 m, u64 horizon) {
  const Field field(p, order_mod(p, m));
  const auto roots = field.roots_of_unity(m);
  std::vector<bool> member(horizon + 1, false);
  std::vector<char> layer(field.q(), 0), next(field.q(), 0);
  layer[0] = 1;
  member[0] = true;
  bool full = false;
  for (u64 n = 1; n <= horizon; ++n) {
    if (!full) {
      std::fill(next.begin(), next.end(), 0);
      for (u64 x = 0; x < field.q(); ++x)
        if (layer[x])
          for (auto r : roots) next[field.add(x, r)] = 1;
      layer.swap(next);
      full = std::all_of(layer.begin(), layer.end(), [](char c) { return c != 0; });
    }
    member[n] = layer[0] != 0;
  }
  return member;
}

/// Exhaustive search for nonzero x_1..x_n with x_1^e + ... + x_n^e = 0 in F_q.
/// Tuples are enumerated in nondecreasing order of codes.
inline bool good_solution_exists(const Field& field, u64 e, unsigned n) {
  std::vector<u64> powers(field.q());
  for (u64 x = 1; x < field.q(); ++x) powers[x] = field.pow(x, e);
  std::function<bool(unsigned, u64, u64)> go = [&](unsigned left, u64 from, u64 sum) {
    if (left == 0) return sum == 0;
    for (u64 x = from; x < field.q(); ++x)
      if (go(left - 1, x, field.add(sum, powers[x]))) return true;
    return false;
  };
  return go(n, 1, 0);
}

}  // namespace oracle
