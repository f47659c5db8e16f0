#include "rootsum/report.hpp"

namespace rootsum {

json field_json(const FieldTable& field) {
  return {{"p", field.characteristic()},
          {"k", field.degree()},
          {"modulus_coeffs", field.modulus().coeffs()},
          {"modulus", field.modulus().to_string()},
          {"generator_poly", field.generator_poly().coeffs()}};
}

json weights_json(const WeightSet& ws) {
  return {{"p", ws.p},
          {"m", ws.m},
          {"m_prime", ws.m_prime},
          {"k", ws.k},
          {"period", ws.period},
          {"members_below", ws.members_below},
          {"tail_start", ws.tail_start},
          {"bound_B", ws.bound}};
}

json certificate_json(const Certificate& cert) {
  return {{"n", cert.n}, {"m_prime", cert.m_prime}, {"exponents", cert.exponents}};
}

json factorization_json(const FactorizationReport& rep) {
  json factors = json::array();
  for (const auto& f : rep.factors)
    factors.push_back({{"coeffs", f.poly.coeffs()},
                       {"degree", f.degree},
                       {"trace_coeff", f.trace_coeff},
                       {"poly", f.poly.to_string()}});
  return {{"p", rep.p}, {"m", rep.m}, {"factors", factors}, {"pretty", rep.pretty()}};
}

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json bounds_json(const BoundReport& rep) {
  json preds = json::array();
  for (const auto& pr : rep.predictions)
    preds.push_back({{"bound", to_string(pr.kind)}, {"tail", opt(pr.tail)}});
  return {{"p", rep.p},
          {"m", rep.m},
          {"k", rep.k},
          {"case", to_string(rep.case_class.gcd_class)},
          {"exception", to_string(rep.case_class.exception)},
          {"d", rep.d},
          {"m0", rep.m0},
          {"d0", rep.d0},
          {"d_prime", rep.d_prime},
          {"ell", rep.ell},
          {"m_prime", rep.m_prime},
          {"s", opt(rep.s)},
          {"t", opt(rep.t)},
          {"predictions", preds},
          {"best", rep.best}};
}

json trace_json(const TraceProfile& tp) {
  return {{"p", tp.p},         {"m", tp.m}, {"ell", tp.ell},
          {"m_prime", tp.m_prime}, {"r", tp.r}, {"T", tp.trace_set},
          {"t", tp.t},         {"factor_traces", tp.factor_traces}};
}

json solve_json(const FieldTable& field, const SolveResult& res) {
  json out = {{"field", field_json(field)},
              {"d", res.d},
              {"m", res.m},
              {"status", res.status == SolveStatus::Solved ? "solved" : "no_solution"},
              {"weights", weights_json(res.evidence)}};
  json sol = nullptr;
  if (res.solution) {
    sol = json::array();
    for (auto x : res.solution->values)
      sol.push_back({{"log", x.log()}, {"poly", field.to_poly(x).coeffs()},
                     {"text", field.to_poly(x).to_string()}});
  }
  out["solution"] = sol;
  return out;
}

namespace {

std::string_view status_name(PairStatus s) {
  return s == PairStatus::Checked ? "checked" : "skipped(cap)";
}

}  // namespace

json audit_json(const AuditReport& rep) {
  json pairs = json::array();
  for (const auto& pr : rep.pairs) {
    json checks = json::array();
    for (const auto& c : pr.checks)
      checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json bounds = json::array();
    for (const auto& b : pr.bounds) bounds.push_back(bounds_json(b));
    json trace = nullptr;
    if (pr.trace) {
      trace = trace_json(*pr.trace);
      trace["t_equals_r_plus_1"] = pr.trace->t == pr.trace->r + 1;
    }
    pairs.push_back({{"p", pr.p},
                     {"m", pr.m},
                     {"k_min", pr.k_min},
                     {"status", status_name(pr.status)},
                     {"weights", pr.weights ? weights_json(*pr.weights) : json(nullptr)},
                     {"bounds", bounds},
                     {"trace", trace},
                     {"checks", checks}});
  }
  json fields = json::array();
  for (const auto& f : rep.fields) {
    json divs = json::array();
    for (const auto& c : f.divisors)
      divs.push_back({{"d", c.d}, {"m", c.m}, {"solved", c.solved}, {"failed", c.failed}});
    fields.push_back({{"p", f.p}, {"k", f.k}, {"q", f.q}, {"divisors", divs}});
  }
  json failures = json::array();
  for (const auto& f : rep.failures)
    failures.push_back({{"check", f.check}, {"detail", f.detail}, {"reproduce", f.reproduce}});
  const auto& o = rep.options;
  const auto& c = rep.counters;
  return {{"params",
           {{"p_max", o.p_max},
            {"m_max", o.m_max},
            {"field_cap", o.field_cap},
            {"window", opt(o.window)},
            {"solve_field_max", o.solve_field_max}}},
          {"counters",
           {{"pairs", c.pairs},
            {"pairs_checked", c.pairs_checked},
            {"pairs_skipped", c.pairs_skipped},
            {"checks", c.checks},
            {"checks_passed", c.checks_passed},
            {"fields", c.fields},
            {"solves", c.solves}}},
          {"passed", rep.passed()},
          {"seconds", rep.seconds},
          {"failures", failures},
          {"pairs", pairs},
          {"fields", fields}};
}

void write_audit_tsv(std::ostream& os, const AuditReport& rep) {
  os << "p\tm\tcheck\tstatus\tdetail\n";
  for (const auto& pr : rep.pairs) {
    if (pr.status == PairStatus::SkippedCap)
      os << pr.p << '\t' << pr.m << "\tweights\tskipped(cap)\t\n";
    for (const auto& c : pr.checks)
      os << pr.p << '\t' << pr.m << '\t' << c.name << '\t' << (c.passed ? "pass" : "fail") << '\t'
         << c.detail << '\n';
  }
  for (const auto& f : rep.fields)
    for (const auto& c : f.divisors)
      os << f.p << '\t' << c.m << "\tindex_bound:q=" << f.q << ",d=" << c.d << '\t'
         << (c.passed() ? "pass" : "fail") << "\tsolved " << c.solved << '\n';
}

}  // namespace rootsum
