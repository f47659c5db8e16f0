#include "rootsum/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "rootsum/arith.hpp"
#include "rootsum/cyclotomic.hpp"
#include "rootsum/trace.hpp"

namespace rootsum {

std::string_view to_string(GcdClass c) {
  switch (c) {
    case GcdClass::GE3: return "ge3";
    case GcdClass::EQ2: return "eq2";
    case GcdClass::EQ1: return "eq1";
  }
  return "?";
}

std::string_view to_string(BoundException e) {
  switch (e) {
    case BoundException::None: return "none";
    case BoundException::TernaryFullIndex: return "ternary_full_index";
    case BoundException::IndexIsPMinusOne: return "index_is_p_minus_1";
    case BoundException::BinaryFive: return "binary_five";
  }
  return "?";
}

std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::UniformIndex: return "uniform_index";
    case BoundKind::SubfieldRoots: return "subfield_roots";
    case BoundKind::SubfieldIndex: return "subfield_index";
    case BoundKind::EvenIndex: return "even_index";
    case BoundKind::TraceSumset: return "trace_sumset";
    case BoundKind::TraceSumsetWeak: return "trace_sumset_weak";
    case BoundKind::MinimalFieldIndex: return "minimal_field_index";
    case BoundKind::CoprimeIndex: return "coprime_index";
    case BoundKind::QuadraticCharacter: return "quadratic_character";
  }
  return "?";
}

namespace {

struct Basics {
  std::uint64_t q;
  std::uint64_t m0;
  std::uint64_t ell;
  std::uint64_t m_prime;
  std::uint64_t p_ell;
};

Basics basics(std::uint64_t p, std::uint64_t m, unsigned k, std::uint64_t min_m) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::PreconditionViolated, "(p=" + std::to_string(p) + ", m=" +
                                                     std::to_string(m) + ", k=" +
                                                     std::to_string(k) + "): " + why);
  };
  if (!is_prime(p)) fail("p is not prime");
  if (m < min_m) fail("m too small");
  if (std::gcd(p, m) != 1) fail("p divides m");
  if (k < 1) fail("k must be >= 1");
  const auto q = checked_pow(p, k, std::uint64_t{1} << 62);
  if (!q) fail("p^k does not fit in 62 bits");
  if ((*q - 1) % m != 0) fail("m does not divide p^k - 1");
  Basics b{*q, std::gcd(p - 1, m), ell_of(p, m), 0, 0};
  b.p_ell = *checked_pow(p, b.ell);
  b.m_prime = std::gcd(b.p_ell - 1, m);
  return b;
}

}  // namespace

CaseClass classify(std::uint64_t p, std::uint64_t m, unsigned k) {
  const auto b = basics(p, m, k, 3);
  CaseClass cc;
  if (b.m0 >= 3) {
    cc.gcd_class = GcdClass::GE3;
  } else if (b.m0 == 2) {
    cc.gcd_class = GcdClass::EQ2;
    if (p == 3 && m == b.q - 1) cc.exception = BoundException::TernaryFullIndex;
  } else {
    cc.gcd_class = GcdClass::EQ1;
    const auto d_prime = (b.p_ell - 1) / b.m_prime;
    if (d_prime == p - 1)
      cc.exception = BoundException::IndexIsPMinusOne;
    else if (p == 2 && d_prime == 3 && b.m_prime == 5)
      cc.exception = BoundException::BinaryFive;
  }
  return cc;
}

BoundReport predicted_tails(std::uint64_t p, std::uint64_t m, unsigned k, const Limits& limits) {
  if (m == 2 && k < 2)
    throw Error(ErrorKind::PreconditionViolated, "m = 2 needs k >= 2");
  const auto b = basics(p, m, k, 2);

  BoundReport rep;
  rep.p = p;
  rep.m = m;
  rep.k = k;
  rep.d = (b.q - 1) / m;
  rep.m0 = b.m0;
  rep.d0 = (p - 1) / b.m0;
  rep.ell = b.ell;
  rep.m_prime = b.m_prime;
  rep.d_prime = (b.p_ell - 1) / b.m_prime;

  auto add = [&](BoundKind kind, std::optional<std::uint64_t> tail) {
    rep.predictions.push_back({kind, tail});
  };
  add(BoundKind::UniformIndex, rep.d + 1);

  if (m == 2) {
    rep.case_class = {GcdClass::EQ2, BoundException::None};
  } else {
    rep.case_class = classify(p, m, k);
    const bool bumped = rep.case_class.exception != BoundException::None;
    switch (rep.case_class.gcd_class) {
      case GcdClass::GE3:
        add(BoundKind::SubfieldRoots, rep.d0 + 1);
        add(BoundKind::SubfieldIndex, rep.d + 1);
        break;
      case GcdClass::EQ2:
        add(BoundKind::EvenIndex, rep.d + (bumped ? 1 : 0));
        break;
      case GcdClass::EQ1: {
        rep.s = (b.p_ell - 1) / (p - 1) / b.m_prime;
        std::optional<std::uint64_t> trace_tail, weak_tail;
        try {
          rep.t = trace_profile(p, m, limits).t;
          if (*rep.t < 2) throw Error(ErrorKind::InternalMismatch, "trace set is a singleton");
          trace_tail = rep.ell * ceil_div(p - 1, *rep.t - 1);
          weak_tail = rep.ell * (p - 1);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SizeCapExceeded) throw;
        }
        add(BoundKind::TraceSumset, trace_tail);
        add(BoundKind::TraceSumsetWeak, weak_tail);
        add(BoundKind::MinimalFieldIndex, rep.d_prime + (bumped ? 1 : 0));
        add(BoundKind::CoprimeIndex, rep.d + (bumped ? 1 : 0));
        if (quadratic_trace_applies(p, m))
          add(BoundKind::QuadraticCharacter, quadratic_trace_tail(p, m));
        break;
      }
    }
  }

  rep.best = UINT64_MAX;
  for (const auto& pr : rep.predictions)
    if (pr.tail) rep.best = std::min(rep.best, *pr.tail);
  return rep;
}

std::uint64_t semigroup_tail(std::uint64_t a, std::uint64_t b) {
  if (a < 2 || b < 2)
    throw Error(ErrorKind::PreconditionViolated, "semigroup generators must be >= 2");
  if (std::gcd(a, b) != 1)
    throw Error(ErrorKind::NotCoprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  return (a - 1) * (b - 1);
}

WeightSet prime_power_weight_set(std::uint64_t p, std::uint64_t m) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const auto base = m >= 2 ? prime_power_base(m) : std::nullopt;
  if (!base || *base == p)
    throw Error(ErrorKind::HypothesisFails,
                std::to_string(m) + " is not a power of a prime other than " + std::to_string(p));
  if (!phi_m_irreducible_mod_p(p, m))
    throw Error(ErrorKind::HypothesisFails, "cyclotomic polynomial of order " +
                                                std::to_string(m) + " splits mod " +
                                                std::to_string(p));
  const auto ell = *base;
  WeightSet ws;
  ws.p = p;
  ws.m = m;
  ws.m_prime = m;
  ws.k = splitting_degree(p, m);
  ws.period = 1;
  ws.bound = exploration_bound(p, m);
  ws.tail_start = semigroup_tail(p, ell);
  for (std::uint64_t n = 0; n < ws.bound; ++n) {
    bool member = false;
    for (std::uint64_t a = 0; a * p <= n && !member; ++a) member = (n - a * p) % ell == 0;
    if (member) ws.members_below.push_back(n);
  }
  return ws;
}

}  // namespace rootsum
