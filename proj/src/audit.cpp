#include "rootsum/audit.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "rootsum/arith.hpp"
#include "rootsum/cyclotomic.hpp"
#include "rootsum/diagonal.hpp"

namespace rootsum {

ResidueSet sumset(std::uint64_t p, const ResidueSet& a, const ResidueSet& b) {
  std::vector<bool> hit(p, false);
  for (auto x : a)
    for (auto y : b) hit[(x + y) % p] = true;
  ResidueSet out;
  for (std::uint64_t r = 0; r < p; ++r)
    if (hit[r]) out.push_back(r);
  return out;
}

bool cauchy_davenport_check(std::uint64_t p, const ResidueSet& a, const ResidueSet& b) {
  if (a.empty() || b.empty()) return true;
  return sumset(p, a, b).size() >= std::min<std::uint64_t>(p, a.size() + b.size() - 1);
}

std::vector<ResidueSet> iterated_sumsets(std::uint64_t p, const ResidueSet& base,
                                         std::size_t count) {
  std::vector<ResidueSet> layers;
  if (count == 0) return layers;
  ResidueSet norm;
  for (auto x : base) norm.push_back(x % p);
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  layers.push_back(norm);
  while (layers.size() < count) layers.push_back(sumset(p, layers.back(), norm));
  return layers;
}

bool cauchy_davenport_layers(std::uint64_t p, const ResidueSet& base, std::size_t count) {
  const auto layers = iterated_sumsets(p, base, count);
  for (std::size_t i = 1; i < layers.size(); ++i)
    if (layers[i].size() < std::min<std::uint64_t>(p, layers[i - 1].size() + layers[0].size() - 1))
      return false;
  return true;
}

std::vector<IndexCheck> verify_index_bound(const std::shared_ptr<const FieldTable>& field,
                                           std::uint64_t window) {
  std::vector<IndexCheck> out;
  const auto units = field->units();
  for (auto d : divisors(units)) {
    const auto m = units / d;
    if (m == 1 || (m == 2 && field->degree() < 2)) continue;
    IndexCheck check{d, m, 0, {}};
    const DiagonalSolver solver(field, d);
    for (auto n = d + 1; n <= d + 1 + window; ++n) {
      bool ok = false;
      try {
        const auto res = solver.solve(n);
        ok = res.status == SolveStatus::Solved && res.solution &&
             res.solution->values.size() == n && is_good_solution(*field, d, *res.solution);
      } catch (const Error&) {
        ok = false;
      }
      if (ok)
        ++check.solved;
      else
        check.failed.push_back(n);
    }
    out.push_back(std::move(check));
  }
  return out;
}

namespace {

std::string cmd(const std::string& sub, std::uint64_t p, std::uint64_t m) {
  return "rootsum " + sub + " --p " + std::to_string(p) + " --m " + std::to_string(m);
}

std::string list(const std::vector<std::uint64_t>& xs, std::size_t limit = 12) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) os << (i ? "," : "") << xs[i];
  if (xs.size() > limit) os << ",...";
  os << '}';
  return os.str();
}

class PairAuditor {
 public:
  PairAuditor(std::uint64_t p, std::uint64_t m, std::uint64_t cap) : cap_(cap) {
    rec_.p = p;
    rec_.m = m;
    limits_.field_cap = cap;
  }

  PairRecord run() {
    const auto p = rec_.p, m = rec_.m;
    rec_.k_min = splitting_degree(p, m);
    check("ell_definition", ell_of(p, m) == ell_by_definition(p, m), "", cmd("trace", p, m));
    guarded("trace", cmd("trace", p, m), [&] { trace_checks(); });

    const auto q = checked_pow(p, rec_.k_min, cap_);
    if (!q) {
      rec_.status = PairStatus::SkippedCap;
      return std::move(rec_);
    }
    guarded("weights", cmd("weights", p, m), [&] { weight_checks(); });
    return std::move(rec_);
  }

 private:
  void check(std::string name, bool ok, std::string detail, std::string reproduce) {
    rec_.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail),
                           std::move(reproduce)});
  }

  template <class F>
  void guarded(const std::string& name, const std::string& reproduce, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SizeCapExceeded) return;
      check(name + ":error", false, std::string(to_string(e.kind())) + ": " + e.what(), reproduce);
    } catch (const std::exception& e) {
      check(name + ":error", false, e.what(), reproduce);
    }
  }

  void trace_checks() {
    const auto p = rec_.p, m = rec_.m;
    const auto repro = cmd("trace", p, m);
    const auto tp = trace_profile(p, m, limits_);
    rec_.trace = tp;
    check("trace_set_size", tp.t >= 2, "t = " + std::to_string(tp.t), repro);

    std::uint64_t sum = 1;
    for (std::size_t i = 1; i < tp.factor_traces.size(); ++i) sum += tp.factor_traces[i];
    check("trace_root_sum", tp.m_prime < 2 || sum % p == 0,
          "1 + sum of factor traces = " + std::to_string(sum % p) + " mod p", repro);

    if (tp.ell == 2)
      check("trace_quadratic_field", tp.t == tp.r + 1,
            "t = " + std::to_string(tp.t) + ", r = " + std::to_string(tp.r), repro);

    if (quadratic_trace_applies(p, m))
      check("trace_quadratic_character", quadratic_trace_count(p, m) == tp.t,
            "predicted " + std::to_string(quadratic_trace_count(p, m)) + ", t = " +
                std::to_string(tp.t),
            "rootsum trace --prop65 --p " + std::to_string(p) + " --q " + std::to_string(m));

    const auto fr = factor_xm_minus_1(p, tp.m_prime, limits_);
    auto target = PrimePoly::monomial(p, tp.m_prime) - PrimePoly::constant(p, 1);
    bool degrees = true;
    for (const auto& f : fr.factors)
      if (f.degree != 1 && f.degree != tp.ell) degrees = false;
    check("factor_product", fr.product() == target && degrees, "product " +
                                                                    fr.product().to_string(),
          cmd("factor", p, tp.m_prime));

    if (tp.t >= 2) {
      const auto steps = ceil_div(p - 1, tp.t - 1);
      const auto layers = iterated_sumsets(p, tp.trace_set, steps + 1);
      check("cauchy_davenport_trace",
            cauchy_davenport_layers(p, tp.trace_set, steps + 1) && layers[steps - 1].size() == p,
            "|" + std::to_string(steps) + "*T| = " + std::to_string(layers[steps - 1].size()), repro);
    }
  }

  void weight_checks() {
    const auto p = rec_.p, m = rec_.m;
    const auto repro = cmd("weights", p, m);
    auto field = std::make_shared<const FieldTable>(build_field(p, rec_.k_min, std::nullopt, limits_));
    const auto analysis = analyze_weights_in(field, m);
    const auto& ws = analysis.weights;
    rec_.weights = ws;
    const auto& tower = analysis.tower;

    check("layers_monotone", tower.monotone(), "layer(n + p) misses part of layer(n)", repro);

    // W_p(m'') is contained in W_p(m) for m'' = gcd(p^ell - 1, m), computed in F_{p^ell}.
    const auto ell = ell_of(p, m);
    const auto m_min = std::gcd(*checked_pow(p, ell) - 1, m);
    auto horizon = ws.bound + 2 * p;
    if (m_min != m) {
      const auto reduced = compute_weight_set(p, m_min, limits_);
      horizon = std::max(horizon, reduced.bound + 2 * p);
      std::vector<std::uint64_t> missing;
      for (std::uint64_t n = 0; n <= horizon; ++n)
        if (reduced.contains(n) && !ws.contains(n)) missing.push_back(n);
      check("minimal_field_containment", missing.empty(), "not members: " + list(missing),
            cmd("weights", p, m_min));
    }

    std::vector<std::uint64_t> open;
    for (auto a : ws.members_below)
      for (auto b : ws.members_below) {
        if (b < a) continue;
        if (!ws.contains(a + b)) open.push_back(a + b);
      }
    check("additive_closure", open.empty(), "sums not members: " + list(open), repro);

    // Np + sum of N r over the prime divisors r of m'.
    std::vector<bool> reach(horizon + 1, false);
    reach[0] = true;
    std::vector<std::uint64_t> gens{p};
    for (auto r : prime_divisors(ws.m_prime)) gens.push_back(r);
    std::vector<std::uint64_t> missing;
    for (std::uint64_t n = 0; n <= horizon; ++n) {
      for (auto g : gens)
        if (n >= g && reach[n - g]) reach[n] = true;
      if (reach[n] && !ws.contains(n)) missing.push_back(n);
    }
    check("prime_semigroup", missing.empty(), "not members: " + list(missing), repro);

    if (rec_.k_min == 1) {
      bool ok = true;
      for (std::size_t n = 1; n < tower.height() && ok; ++n) {
        const auto a = tower.layer(n).size(m), b = tower.layer(n + 1).size(m);
        ok = b >= std::min<std::uint64_t>(p, a + m - 1);
      }
      check("cauchy_davenport_prime_layers", ok, "sumset layer grew too slowly", repro);
    }

    closed_form(ws, repro);
    for (unsigned k = rec_.k_min; checked_pow(p, k, cap_); k += rec_.k_min)
      guarded("bounds@k=" + std::to_string(k),
              "rootsum bounds --p " + std::to_string(p) + " --m " + std::to_string(m) + " --k " +
                  std::to_string(k),
              [&] { bound_checks(ws, k); });
    sharpness(ws, repro);
  }

  void closed_form(const WeightSet& ws, const std::string& repro) {
    const auto p = rec_.p, m = rec_.m;
    const auto base = prime_power_base(m);
    if (!base || *base == p || !phi_m_irreducible_mod_p(p, m)) return;
    const auto closed = prime_power_weight_set(p, m);
    std::vector<std::uint64_t> differ;
    for (std::uint64_t n = 0; n <= std::max(ws.bound, closed.bound) + 2 * p; ++n)
      if (ws.contains(n) != closed.contains(n)) differ.push_back(n);
    check("closed_form", differ.empty(), "differs at " + list(differ), repro);
  }

  void bound_checks(const WeightSet& ws, unsigned k) {
    const auto p = rec_.p, m = rec_.m;
    const auto repro = "rootsum bounds --p " + std::to_string(p) + " --m " + std::to_string(m) +
                       " --k " + std::to_string(k);
    const auto rep = predicted_tails(p, m, k, limits_);
    const auto q = *checked_pow(p, k);
    const auto suffix = "@k=" + std::to_string(k);

    bool div = (q - 1) % m == 0 && rep.d * m == q - 1 && m % rep.m_prime == 0 &&
               (p - 1) % rep.m0 == 0 && m % rep.m0 == 0;
    if (rep.case_class.gcd_class == GcdClass::GE3) div = div && rep.d % rep.d0 == 0;
    if (rep.case_class.gcd_class == GcdClass::EQ1)
      div = div && rep.d % rep.d_prime == 0 && rep.s && *rep.s * (p - 1) == rep.d_prime;
    check("divisibility" + suffix, div, "index relations broken", repro);

    for (const auto& pr : rep.predictions) {
      if (!pr.tail) continue;
      const bool sound = ws.period == 1 && ws.tail_start <= *pr.tail;
      check("sound:" + std::string(to_string(pr.kind)) + suffix, sound,
            "tail " + std::to_string(*pr.tail) + " but exact tail starts at " +
                std::to_string(ws.tail_start),
            repro);
    }

    if (rep.case_class.gcd_class == GcdClass::GE3) {
      ResidueSet h;
      const auto field = build_field(p, 1);
      const auto sub = roots_of_unity(field, rep.m0);
      for (std::uint64_t j = 0; j < rep.m0; ++j) h.push_back(*field.residue(sub.root(j)));
      const auto layers = iterated_sumsets(p, h, rep.d0 + 1 + p);
      bool zero = true;
      for (auto n = rep.d0 + 1; n <= layers.size(); ++n)
        zero = zero && std::binary_search(layers[n - 1].begin(), layers[n - 1].end(), 0);
      check("cauchy_davenport_subfield" + suffix,
            cauchy_davenport_layers(p, h, rep.d0 + 1 + p) && zero,
            "H = " + list(h), repro);
    }

    if (rep.case_class.exception == BoundException::TernaryFullIndex)
      check("sharp:ternary_full_index" + suffix, !ws.contains(rep.d),
            std::to_string(rep.d) + " is a weight", repro);
    if (rep.case_class.exception == BoundException::BinaryFive)
      check("sharp:binary_five" + suffix, !ws.contains(rep.d_prime),
            std::to_string(rep.d_prime) + " is a weight", repro);
    rec_.bounds.push_back(rep);
  }

  void sharpness(const WeightSet& ws, const std::string& repro) {
    const auto p = rec_.p, m = rec_.m;
    if (p == 2 && m == 5) check("sharp:3_not_weight", !ws.contains(3), "3 is a weight", repro);
    if (p == 13 && m == 4)
      check("sharp:d0_not_weight", !ws.contains(3) && ws.contains(4), "3 or 4 misplaced", repro);
    if (p % 4 == 3 && 2 * m == p - 1)
      check("sharp:d0_not_weight", !ws.contains(2), "2 is a weight", repro);
  }

  PairRecord rec_;
  std::uint64_t cap_;
  Limits limits_;
};

}  // namespace

PairRecord audit_pair(std::uint64_t p, std::uint64_t m, std::uint64_t field_cap) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 3 || std::gcd(p, m) != 1)
    throw Error(ErrorKind::PreconditionViolated, "need m >= 3 and gcd(p, m) = 1");
  return PairAuditor(p, m, field_cap).run();
}

FieldRecord audit_field(std::uint64_t p, unsigned k, std::uint64_t window,
                        std::vector<Failure>& out) {
  FieldRecord rec{p, k, *checked_pow(p, k), {}};
  try {
    auto field = std::make_shared<const FieldTable>(build_field(p, k));
    rec.divisors = verify_index_bound(field, window);
    for (const auto& c : rec.divisors)
      if (!c.passed())
        out.push_back({"index_bound",
                       "q = " + std::to_string(rec.q) + ", d = " + std::to_string(c.d) +
                           ": no verified solution for n in " + list(c.failed),
                       "rootsum solve --q " + std::to_string(rec.q) + " --e " +
                           std::to_string(c.d) + " --n " + std::to_string(c.failed.front())});
  } catch (const Error& e) {
    out.push_back({"index_bound:error", e.what(),
                   "rootsum solve --q " + std::to_string(rec.q) + " --e 1 --n 2"});
  }
  return rec;
}

AuditReport sweep(const AuditOptions& options) {
  if (options.p_max < 2 || options.m_max < 1 || options.field_cap < 2)
    throw Error(ErrorKind::PreconditionViolated, "sweep caps must be positive");
  const auto start = std::chrono::steady_clock::now();
  AuditReport report;
  report.options = options;

  for (std::uint64_t p = 2; p <= options.p_max; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t m = 3; m <= options.m_max; ++m) {
      if (m % p == 0) continue;
      auto rec = audit_pair(p, m, options.field_cap);
      ++report.counters.pairs;
      if (rec.status == PairStatus::SkippedCap)
        ++report.counters.pairs_skipped;
      else
        ++report.counters.pairs_checked;
      for (const auto& c : rec.checks) {
        ++report.counters.checks;
        if (c.passed)
          ++report.counters.checks_passed;
        else
          report.failures.push_back({c.name, "(p=" + std::to_string(p) + ", m=" +
                                                 std::to_string(m) + ") " + c.detail,
                                     c.reproduce});
      }
      report.pairs.push_back(std::move(rec));
    }

    const auto field_max = std::min(options.solve_field_max, options.field_cap);
    const auto window = options.window.value_or(2 * p);
    for (unsigned k = 1; checked_pow(p, k, field_max); ++k) {
      auto rec = audit_field(p, k, window, report.failures);
      ++report.counters.fields;
      for (const auto& c : rec.divisors) {
        report.counters.solves += c.solved;
        ++report.counters.checks;
        if (c.passed()) ++report.counters.checks_passed;
      }
      report.fields.push_back(std::move(rec));
    }
  }

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace rootsum
