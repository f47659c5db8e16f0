#include "rootsum/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rootsum/arith.hpp"

namespace rootsum {

namespace {

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

void require_same_prime(const PrimePoly& a, const PrimePoly& b) {
  if (a.prime() != b.prime())
    throw Error(ErrorKind::PreconditionViolated, "polynomials over different primes");
}

}  // namespace

PrimePoly::PrimePoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  if (p_ < 2) throw Error(ErrorKind::NotPrime, "polynomial modulus " + std::to_string(p_));
  for (auto& c : coeffs_) c %= p_;
  trim();
}

PrimePoly PrimePoly::constant(std::uint64_t p, std::uint64_t c) { return PrimePoly(p, {c}); }

PrimePoly PrimePoly::monomial(std::uint64_t p, std::size_t degree, std::uint64_t c) {
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return PrimePoly(p, std::move(coeffs));
}

void PrimePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PrimePoly PrimePoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  const auto inv = inverse_mod_prime(leading(), p_);
  auto out = coeffs_;
  for (auto& c : out) c = mulmod(c, inv, p_);
  return PrimePoly(p_, std::move(out));
}

std::string PrimePoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 'X';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

PrimePoly operator+(const PrimePoly& a, const PrimePoly& b) {
  require_same_prime(a, b);
  const auto p = a.prime();
  std::vector<std::uint64_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a.coeff(i) + b.coeff(i)) % p;
  return PrimePoly(p, std::move(out));
}

PrimePoly operator-(const PrimePoly& a, const PrimePoly& b) {
  require_same_prime(a, b);
  const auto p = a.prime();
  std::vector<std::uint64_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(a.coeff(i), b.coeff(i), p);
  return PrimePoly(p, std::move(out));
}

PrimePoly operator*(const PrimePoly& a, const PrimePoly& b) {
  require_same_prime(a, b);
  const auto p = a.prime();
  if (a.is_zero() || b.is_zero()) return PrimePoly(p);
  std::vector<std::uint64_t> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = (out[i + j] + mulmod(a.coeffs()[i], b.coeffs()[j], p)) % p;
  }
  return PrimePoly(p, std::move(out));
}

PolyDivision divmod(const PrimePoly& a, const PrimePoly& b) {
  require_same_prime(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto p = a.prime();
  if (a.degree() < b.degree()) return {PrimePoly(p), a};
  auto rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<std::uint64_t> quot(rem.size() - db, 0);
  const auto lead_inv = inverse_mod_prime(b.leading(), p);
  for (std::size_t i = rem.size(); i-- > db;) {
    const auto c = mulmod(rem[i], lead_inv, p);
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i - db + j] = sub_mod(rem[i - db + j], mulmod(c, b.coeffs()[j], p), p);
  }
  rem.resize(db);
  return {PrimePoly(p, std::move(quot)), PrimePoly(p, std::move(rem))};
}

PrimePoly operator%(const PrimePoly& a, const PrimePoly& b) { return divmod(a, b).remainder; }

PrimePoly gcd(PrimePoly a, PrimePoly b) {
  require_same_prime(a, b);
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PrimePoly powmod(PrimePoly base, std::uint64_t exp, const PrimePoly& modulus) {
  PrimePoly result = PrimePoly::constant(modulus.prime(), 1) % modulus;
  base = base % modulus;
  while (exp > 0) {
    if (exp & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    exp >>= 1;
  }
  return result;
}

bool is_irreducible(const PrimePoly& f) {
  const int k = f.degree();
  if (k < 1) return false;
  if (k == 1) return true;
  const auto p = f.prime();
  const PrimePoly x = PrimePoly::monomial(p, 1);
  PrimePoly h = x;
  for (int i = 1; i <= k; ++i) {
    h = powmod(h, p, f);
    if (2 * i <= k && gcd(h - x, f).degree() != 0) return false;
  }
  return h == x % f;
}

// ---------------------------------------------------------------------------

namespace {

PrimePoly least_irreducible(std::uint64_t p, unsigned k) {
  // Odometer over (c_0, ..., c_{k-1}) with c_0 most significant.
  std::vector<std::uint64_t> low(k, 0);
  while (true) {
    auto coeffs = low;
    coeffs.push_back(1);
    PrimePoly f(p, std::move(coeffs));
    if (is_irreducible(f)) return f;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++low[i] < p) break;
      low[i] = 0;
      if (i == 0) throw Error(ErrorKind::InternalMismatch, "no irreducible polynomial found");
    }
  }
}

PrimePoly decode(std::uint64_t p, unsigned k, std::uint64_t code) {
  std::vector<std::uint64_t> coeffs(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    coeffs[i] = code % p;
    code /= p;
  }
  return PrimePoly(p, std::move(coeffs));
}

PrimePoly least_primitive(std::uint64_t p, unsigned k, std::uint64_t q, const PrimePoly& f) {
  const auto group = q - 1;
  const auto primes = prime_divisors(group);
  const auto one = PrimePoly::constant(p, 1);
  for (std::uint64_t code = 1; code < q; ++code) {
    auto g = decode(p, k, code);
    bool primitive = true;
    for (auto r : primes) {
      if (powmod(g, group / r, f) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw Error(ErrorKind::InternalMismatch, "no primitive element found");
}

}  // namespace

FieldTable build_field(std::uint64_t p, unsigned k, const std::optional<PrimePoly>& modulus_override,
                       const Limits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::PreconditionViolated, "extension degree must be >= 1");
  const auto q = checked_pow(p, k, limits.field_cap);
  if (!q || *q > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorKind::SizeCapExceeded, std::to_string(p) + "^" + std::to_string(k) +
                                                " exceeds field cap " +
                                                std::to_string(limits.field_cap));

  PrimePoly modulus(p);
  if (modulus_override) {
    const auto& f = *modulus_override;
    if (f.prime() != p || !f.is_monic() || f.degree() != static_cast<int>(k))
      throw Error(ErrorKind::PreconditionViolated,
                  "override must be monic of degree " + std::to_string(k) + " over F_" +
                      std::to_string(p));
    if (!is_irreducible(f))
      throw Error(ErrorKind::OverrideNotIrreducible, f.to_string() + " is reducible");
    modulus = f;
  } else {
    modulus = least_irreducible(p, k);
  }

  auto generator = least_primitive(p, k, *q, modulus);
  FieldTable field(p, k, *q, std::move(modulus), std::move(generator));
  field.build_tables();
  return field;
}

void FieldTable::build_tables() {
  const auto group = q_ - 1;
  exp_to_code_.assign(group, 0);
  code_to_log_.assign(q_, kNoLog);
  zech_.assign(group, kNoLog);

  std::vector<std::uint64_t> f(modulus_.coeffs().begin(), modulus_.coeffs().end());
  const auto& g = generator_.coeffs();
  std::vector<std::uint64_t> cur(k_, 0), prod(k_ + g.size(), 0);
  cur[0] = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    std::uint64_t code = 0;
    for (unsigned j = k_; j-- > 0;) code = code * p_ + cur[j];
    if (code_to_log_[code] != kNoLog)
      throw Error(ErrorKind::InternalMismatch, "generator is not primitive");
    exp_to_code_[i] = static_cast<std::uint32_t>(code);
    code_to_log_[code] = static_cast<std::uint32_t>(i);

    // cur <- cur * g mod f
    std::fill(prod.begin(), prod.end(), 0);
    for (unsigned a = 0; a < k_; ++a) {
      if (cur[a] == 0) continue;
      for (std::size_t b = 0; b < g.size(); ++b)
        prod[a + b] = (prod[a + b] + mulmod(cur[a], g[b], p_)) % p_;
    }
    for (std::size_t top = prod.size(); top-- > k_;) {
      const auto c = prod[top];
      if (c == 0) continue;
      for (unsigned j = 0; j <= k_; ++j)
        prod[top - k_ + j] = sub_mod(prod[top - k_ + j], mulmod(c, f[j], p_), p_);
    }
    std::copy(prod.begin(), prod.begin() + k_, cur.begin());
  }

  for (std::uint64_t i = 0; i < group; ++i) {
    const std::uint64_t code = exp_to_code_[i];
    const std::uint64_t c0 = code % p_;
    const std::uint64_t shifted = code - c0 + (c0 + 1) % p_;
    if (shifted == 0) {
      minus_one_log_ = static_cast<std::uint32_t>(i);
    } else {
      zech_[i] = code_to_log_[shifted];
    }
  }
}

Element FieldTable::add(Element a, Element b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto group = q_ - 1;
  const auto diff = (b.log() + group - a.log()) % group;
  const auto z = zech_[diff];
  if (z == kNoLog) return Element::zero();
  return Element::from_log(static_cast<std::uint32_t>((a.log() + std::uint64_t{z}) % group));
}

Element FieldTable::neg(Element a) const {
  if (a.is_zero()) return a;
  return Element::from_log(
      static_cast<std::uint32_t>((std::uint64_t{a.log()} + minus_one_log_) % (q_ - 1)));
}

Element FieldTable::mul(Element a, Element b) const {
  if (a.is_zero() || b.is_zero()) return Element::zero();
  return Element::from_log(
      static_cast<std::uint32_t>((std::uint64_t{a.log()} + b.log()) % (q_ - 1)));
}

Element FieldTable::inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const auto group = q_ - 1;
  return Element::from_log(static_cast<std::uint32_t>((group - a.log()) % group));
}

Element FieldTable::pow(Element a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return e == 0 ? one() : Element::zero();
  }
  const auto group = static_cast<__int128>(q_ - 1);
  __int128 r = static_cast<__int128>(a.log()) * e % group;
  if (r < 0) r += group;
  return Element::from_log(static_cast<std::uint32_t>(r));
}

Element FieldTable::from_residue(std::int64_t r) const {
  auto m = r % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  return from_code(static_cast<std::uint32_t>(m));
}

std::optional<std::uint64_t> FieldTable::residue(Element x) const {
  const auto c = code(x);
  if (c >= p_) return std::nullopt;
  return c;
}

Element FieldTable::from_code(std::uint32_t code) const {
  if (code >= q_) throw Error(ErrorKind::PreconditionViolated, "element code out of range");
  if (code == 0) return Element::zero();
  return Element::from_log(code_to_log_[code]);
}

PrimePoly FieldTable::to_poly(Element x) const { return decode(p_, k_, code(x)); }

Element FieldTable::from_poly(const PrimePoly& poly) const {
  if (poly.prime() != p_) throw Error(ErrorKind::PreconditionViolated, "polynomial over wrong prime");
  const auto reduced = poly % modulus_;
  std::uint64_t code = 0;
  for (unsigned j = k_; j-- > 0;) code = code * p_ + reduced.coeff(j);
  return from_code(static_cast<std::uint32_t>(code));
}

std::optional<std::uint32_t> FieldTable::zech(std::uint32_t i) const {
  const auto z = zech_.at(i);
  if (z == kNoLog) return std::nullopt;
  return z;
}

std::uint64_t trace_to_prime(const FieldTable& field, Element x) {
  Element sum = Element::zero();
  Element term = x;
  for (unsigned j = 0; j < field.degree(); ++j) {
    sum = field.add(sum, term);
    term = field.pow(term, static_cast<std::int64_t>(field.characteristic()));
  }
  const auto r = field.residue(sum);
  if (!r) throw Error(ErrorKind::InternalMismatch, "trace left the prime subfield");
  return *r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "modulus must be >= 2");
  if (std::gcd(a, n) != 1)
    throw Error(ErrorKind::NotCoprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
  // The order divides the group exponent; test divisors of phi(n) in order.
  for (auto e : divisors(euler_phi(n)))
    if (powmod(a, e, n) == 1) return e;
  throw Error(ErrorKind::InternalMismatch, "order not found");
}

RootGroup roots_of_unity(const FieldTable& field, std::uint64_t m) {
  const auto group = field.units();
  if (m == 0 || group % m != 0)
    throw Error(ErrorKind::DoesNotDivide,
                std::to_string(m) + " does not divide " + std::to_string(group));
  RootGroup roots;
  roots.m = m;
  roots.step = group / m;
  roots.bits.resize(group);
  for (std::uint64_t j = 0; j < m; ++j) roots.bits.set(j * roots.step);
  return roots;
}

}  // namespace rootsum
