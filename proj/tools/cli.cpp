#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "rootsum/arith.hpp"
#include "rootsum/report.hpp"

namespace rootsum {

namespace {

std::vector<std::uint64_t> parse_coeffs(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad coefficient '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vanishing sums of roots of unity over finite fields"};
  app.require_subcommand(1);

  std::uint64_t p = 0, m = 0, q = 0, e = 0, n = 0;
  unsigned k = 0;

  auto* weights = app.add_subcommand("weights", "exact weight set W_p(m)");
  std::optional<std::uint64_t> cert_n;
  std::optional<unsigned> minimal_upto;
  weights->add_option("--p", p, "characteristic")->required();
  weights->add_option("--m", m, "root order")->required();
  weights->add_option("--certificate", cert_n, "emit a vanishing sum of this weight");
  weights->add_option("--minimal-upto", minimal_upto, "enumerate minimal vanishing sums");

  auto* factor = app.add_subcommand("factor", "factor X^m - 1 over F_p");
  factor->add_option("--p", p)->required();
  factor->add_option("--m", m)->required();

  auto* bounds = app.add_subcommand("bounds", "closed-form tails for (p, m, k)");
  bounds->add_option("--p", p)->required();
  bounds->add_option("--m", m)->required();
  bounds->add_option("--k", k)->required();

  auto* trace = app.add_subcommand("trace", "trace set of the minimal root group");
  bool quadratic = false;
  trace->add_option("--p", p)->required();
  trace->add_option("--m", m);
  trace->add_option("--q", q, "odd prime, with --prop65");
  trace->add_flag("--prop65", quadratic, "quadratic character trace count");

  auto* solve = app.add_subcommand("solve", "good solution of x_1^e + ... + x_n^e = 0 in F_q");
  std::optional<std::string> modulus;
  solve->add_option("--q", q)->required();
  solve->add_option("--e", e)->required();
  solve->add_option("--n", n)->required();
  solve->add_option("--modulus", modulus, "comma-separated coefficients, constant term first");

  auto* audit = app.add_subcommand("audit", "sweep all checks over a range");
  AuditOptions opts;
  std::optional<unsigned> cap_bits;
  std::optional<std::string> json_path, tsv_path;
  audit->add_option("--p-max", opts.p_max)->required();
  audit->add_option("--m-max", opts.m_max)->required();
  audit->add_option("--cap", cap_bits, "field size cap as a power of two");
  audit->add_option("--window", opts.window, "constructive window past d+1 (default 2p)");
  audit->add_option("--json", json_path);
  audit->add_option("--tsv", tsv_path);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex, out, err);
  }

  try {
    json result;
    if (weights->parsed()) {
      const auto analysis = analyze_weights(p, m);
      result = weights_json(analysis.weights);
      result["field"] = field_json(analysis.tower.field());
      if (cert_n) {
        if (analysis.weights.contains(*cert_n)) {
          const auto cert = extract_certificate(analysis, *cert_n);
          result["certificate"] = certificate_json(cert);
        } else {
          result["certificate"] = nullptr;
        }
        result["member"] = analysis.weights.contains(*cert_n);
      }
      if (minimal_upto) result["minimal_sums"] = minimal_vanishing_sums(p, m, *minimal_upto);
    } else if (factor->parsed()) {
      result = factorization_json(factor_xm_minus_1(p, m));
    } else if (bounds->parsed()) {
      result = bounds_json(predicted_tails(p, m, k));
    } else if (trace->parsed()) {
      if (quadratic) {
        if (q == 0) throw CLI::ValidationError("--prop65 needs --q");
        const auto qs = q_star(q);
        const auto predicted = quadratic_trace_count(p, q);
        const auto actual = trace_profile(p, q).t;
        result = {{"p", p},           {"q", q},           {"q_star", qs.value},
                  {"predicted_t", predicted}, {"actual_t", actual},
                  {"tail", quadratic_trace_tail(p, q)}, {"agrees", predicted == actual}};
      } else {
        if (m == 0) throw CLI::ValidationError("trace needs --m");
        result = trace_json(trace_profile(p, m));
      }
    } else if (solve->parsed()) {
      std::optional<std::vector<std::uint64_t>> coeffs;
      if (modulus) coeffs = parse_coeffs(*modulus);
      const auto field = field_of_order(q, coeffs);
      const DiagonalSolver solver(field, e);
      result = solve_json(*field, solver.solve(n));
      result["e"] = e;
      result["n"] = n;
    } else if (audit->parsed()) {
      if (cap_bits) {
        if (*cap_bits < 1 || *cap_bits > 32) throw CLI::ValidationError("--cap must be in [1, 32]");
        opts.field_cap = std::uint64_t{1} << *cap_bits;
      }
      const auto report = sweep(opts);
      if (json_path) {
        std::ofstream f(*json_path);
        f << audit_json(report).dump(1) << '\n';
      }
      if (tsv_path) {
        std::ofstream f(*tsv_path);
        write_audit_tsv(f, report);
      }
      json failures = json::array();
      for (const auto& f : report.failures)
        failures.push_back({{"check", f.check}, {"detail", f.detail}, {"reproduce", f.reproduce}});
      const auto& c = report.counters;
      out << json{{"passed", report.passed()},
                  {"pairs", c.pairs},
                  {"pairs_checked", c.pairs_checked},
                  {"pairs_skipped", c.pairs_skipped},
                  {"checks", c.checks},
                  {"checks_passed", c.checks_passed},
                  {"fields", c.fields},
                  {"solves", c.solves},
                  {"seconds", report.seconds},
                  {"failures", failures}}
                 .dump(2)
          << '\n';
      return report.passed() ? 0 : 1;
    }
    out << result.dump(2) << '\n';
    return 0;
  } catch (const Error& ex) {
    err << json{{"error", to_string(ex.kind())}, {"message", ex.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << json{{"error", "InvalidArgument"}, {"message", ex.what()}}.dump() << '\n';
    return 2;
  }
}

}  // namespace rootsum
