#include "rootsum/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

#include "rootsum/arith.hpp"

namespace rootsum {

namespace {

void require_coprime(std::uint64_t p, std::uint64_t m) {
  if (m == 0 || std::gcd(p, m) != 1)
    throw Error(ErrorKind::NotCoprime,
                "gcd(" + std::to_string(p) + ", " + std::to_string(m) + ") != 1");
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

PrimePoly FactorizationReport::product() const {
  PrimePoly acc = PrimePoly::constant(p, 1);
  for (const auto& f : factors) acc = acc * f.poly;
  return acc;
}

std::string FactorizationReport::pretty() const {
  std::string out;
  const PrimePoly x_minus_one(p, {p - 1, 1});
  for (const auto& f : factors) {
    out += '(';
    out += f.poly == x_minus_one ? "X-1" : f.poly.to_string();
    out += ')';
  }
  return out;
}

std::uint64_t strip_p_part(std::uint64_t p, std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::PreconditionViolated, "m must be >= 1");
  if (p < 2) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  while (m % p == 0) m /= p;
  return m;
}

std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t p, std::uint64_t m) {
  require_coprime(p, m);
  std::vector<CyclotomicCoset> cosets;
  std::vector<bool> seen(m, false);
  for (std::uint64_t rep = 0; rep < m; ++rep) {
    if (seen[rep]) continue;
    CyclotomicCoset coset{m, rep, {}};
    std::uint64_t j = rep;
    do {
      seen[j] = true;
      coset.members.push_back(j);
      j = mulmod(j, p, m);
    } while (j != rep);
    std::sort(coset.members.begin(), coset.members.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

unsigned splitting_degree(std::uint64_t p, std::uint64_t m) {
  require_coprime(p, m);
  if (m == 1) return 1;
  return static_cast<unsigned>(multiplicative_order(p % m, m));
}

FactorizationReport factor_xm_minus_1(std::uint64_t p, std::uint64_t m, const Limits& limits) {
  require_prime(p);
  require_coprime(p, m);
  const auto field = build_field(p, splitting_degree(p, m), std::nullopt, limits);
  const auto roots = roots_of_unity(field, m);

  FactorizationReport report{p, m, {}};
  for (const auto& coset : cyclotomic_cosets(p, m)) {
    // Coefficients lowest degree first; multiply by (X - zeta^j) in turn.
    std::vector<Element> coeffs{field.one()};
    for (auto j : coset.members) {
      const auto root = roots.root(j);
      std::vector<Element> next(coeffs.size() + 1, Element::zero());
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i + 1] = field.add(next[i + 1], coeffs[i]);
        next[i] = field.sub(next[i], field.mul(root, coeffs[i]));
      }
      coeffs = std::move(next);
    }
    std::vector<std::uint64_t> residues;
    for (auto c : coeffs) {
      const auto r = field.residue(c);
      if (!r)
        throw Error(ErrorKind::InternalMismatch,
                    "coset product has a coefficient outside F_" + std::to_string(p));
      residues.push_back(*r);
    }
    PrimePoly poly(p, std::move(residues));
    const auto degree = static_cast<unsigned>(poly.degree());
    const auto trace_coeff = (p - poly.coeff(degree - 1)) % p;
    report.factors.push_back({std::move(poly), degree, trace_coeff});
  }

  std::sort(report.factors.begin(), report.factors.end(), [](const auto& a, const auto& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return report;
}

std::uint64_t ell_of(std::uint64_t p, std::uint64_t m) {
  require_coprime(p, m);
  if (m < 2) throw Error(ErrorKind::PreconditionViolated, "m must be >= 2");
  std::uint64_t best = UINT64_MAX;
  for (auto q : prime_divisors(m)) best = std::min(best, multiplicative_order(p % q, q));
  return best;
}

std::uint64_t ell_by_definition(std::uint64_t p, std::uint64_t m) {
  require_coprime(p, m);
  if (m < 2) throw Error(ErrorKind::PreconditionViolated, "m must be >= 2");
  std::uint64_t power = p % m;
  for (std::uint64_t e = 1;; ++e) {
    if (std::gcd((power + m - 1) % m, m) > 1) return e;
    power = mulmod(power, p, m);
  }
}

bool phi_m_irreducible_mod_p(std::uint64_t p, std::uint64_t m) {
  require_coprime(p, m);
  if (m < 2) throw Error(ErrorKind::PreconditionViolated, "m must be >= 2");
  return multiplicative_order(p % m, m) == euler_phi(m);
}

}  // namespace rootsum
