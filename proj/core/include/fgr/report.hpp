#pragma once

// JSON and text renderings of verification results.
//
// {"claims":[{"id", "stage", "exact_match", "expected", "computed",
//             "symbolic_residual", "numeric_computed", "numeric_expected",
//             "numeric_direct", "numeric_residual", "error_estimate",
//             "adjudication", "anomalies", "passed", "elapsed_ms"}],
//  "gamma":{"symbolic", "numeric", "closed_form", ...},
//  "config":{...}, "summary":{"total", "passed"}, "passed"}
//
// Exact quantities are rendered as strings; combinations also carry their
// term list with fractions as strings.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgr/pipeline.hpp"
#include "fgr/quadrature.hpp"

namespace fgr {

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const GammaSummary& g);

/// Reports plus an optional Gamma summary. "passed" requires every claim to
/// pass and, when present, |direct_sum - closed_form| < numeric_tol.
nlohmann::json make_report(const std::vector<VerificationReport>& claims, const std::optional<GammaSummary>& gamma,
                           const QuadConfig& cfg, double numeric_tol);

/// Canonical serialization: two-space indent, trailing newline.
std::string dump_report(const nlohmann::json& report);

/// Drops the timing fields, for comparing runs.
nlohmann::json without_timing(nlohmann::json report);

void print_text(std::ostream& os, const std::vector<VerificationReport>& claims);
void print_text(std::ostream& os, const GammaSummary& g);

}  // namespace fgr
