#pragma once

// JSON and TSV renderings of the library's results.

#include <json.hpp>
#include <ostream>

#include "rootsum/audit.hpp"
#include "rootsum/bounds.hpp"
#include "rootsum/cyclotomic.hpp"
#include "rootsum/diagonal.hpp"
#include "rootsum/gf.hpp"
#include "rootsum/trace.hpp"
#include "rootsum/weights.hpp"

namespace rootsum {

using nlohmann::json;

/// {p, k, modulus_coeffs, generator_poly}, coefficients constant term first.
json field_json(const FieldTable& field);
json weights_json(const WeightSet& ws);
json certificate_json(const Certificate& cert);
json factorization_json(const FactorizationReport& rep);
json bounds_json(const BoundReport& rep);
json trace_json(const TraceProfile& tp);
json solve_json(const FieldTable& field, const SolveResult& res);
json audit_json(const AuditReport& rep);

/// One line per check: p, m, check, status, detail.
void write_audit_tsv(std::ostream& os, const AuditReport& rep);

}  // namespace rootsum
