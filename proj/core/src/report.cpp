#include "fgr/report.hpp"

#include <cmath>
#include <iomanip>

namespace fgr {

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["description"] = r.description;
  j["stage"] = to_string(r.stage);
  j["exact_match"] = r.exact_match;
  j["expected"] = r.expected.to_string();
  j["computed"] = r.computed.to_string();
  j["symbolic_residual"] = r.symbolic_residual.to_json();
  j["numeric_computed"] = r.numeric_computed;
  j["numeric_expected"] = r.numeric_expected;
  j["numeric_direct"] = r.numeric_direct ? nlohmann::json(*r.numeric_direct) : nlohmann::json();
  j["numeric_residual"] = r.numeric_residual;
  j["error_estimate"] = r.error_estimate;
  j["adjudication"] = to_string(r.adjudication);
  j["anomalies"] = r.anomalies;
  j["passed"] = r.passed;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::json to_json(const GammaSummary& g) {
  return {{"symbolic", g.symbolic.to_string()},
          {"symbolic_terms", g.symbolic.to_json()["terms"]},
          {"numeric", g.numeric},
          {"closed_form", g.closed_form},
          {"direct_sum", g.direct_sum},
          {"direct_error_estimate", g.direct_error_estimate},
          {"abs_diff_numeric", std::abs(g.numeric - g.closed_form)},
          {"abs_diff_direct", std::abs(g.direct_sum - g.closed_form)},
          {"p1", g.p1},
          {"p1_closed_form", g.p1_closed_form},
          {"phi3_sq_T_convolution", g.phi3_sq_T_convolution},
          {"phi3_sq_T_spectral", g.phi3_sq_T_spectral},
          {"c0", g.c0}};
}

nlohmann::json make_report(const std::vector<VerificationReport>& claims, const std::optional<GammaSummary>& gamma,
                           const QuadConfig& cfg, double numeric_tol) {
  nlohmann::json j;
  nlohmann::json arr = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : claims) {
    arr.push_back(to_json(r));
    if (r.passed) ++passed;
  }
  j["claims"] = std::move(arr);
  bool ok = passed == claims.size();
  if (gamma) {
    j["gamma"] = to_json(*gamma);
    ok = ok && std::abs(gamma->direct_sum - gamma->closed_form) < numeric_tol;
  }
  j["config"] = {{"abs_tol", cfg.abs_tol},
                 {"truncation_radius", cfg.truncation_radius},
                 {"max_refinement_depth", cfg.max_refinement_depth},
                 {"numeric_tol", numeric_tol}};
  j["summary"] = {{"total", claims.size()}, {"passed", passed}};
  j["passed"] = ok;
  return j;
}

std::string dump_report(const nlohmann::json& report) { return report.dump(2) + "\n"; }

nlohmann::json without_timing(nlohmann::json report) {
  if (report.contains("claims")) {
    for (auto& c : report["claims"]) c.erase("elapsed_ms");
  }
  return report;
}

void print_text(std::ostream& os, const std::vector<VerificationReport>& claims) {
  std::size_t passed = 0;
  for (const auto& r : claims) {
    if (r.passed) ++passed;
    os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(14) << r.id << std::right << " ["
       << to_string(r.stage) << "] exact=" << (r.exact_match ? "yes" : "no") << " residual=" << std::scientific
       << std::setprecision(2) << r.numeric_residual << " est=" << r.error_estimate << std::defaultfloat;
    if (!r.exact_match) os << "\n     symbolic residual: " << r.symbolic_residual.to_string();
    if (r.adjudication != Adjudication::Exact) os << "\n     adjudication: " << to_string(r.adjudication);
    for (const auto& a : r.anomalies) os << "\n     anomaly: " << a;
    os << '\n';
  }
  os << passed << "/" << claims.size() << " claims passed\n";
}

void print_text(std::ostream& os, const GammaSummary& g) {
  os << std::setprecision(16);
  os << "Gamma         = " << g.symbolic.to_string() << "\n";
  os << "Gamma numeric = " << g.numeric << "\n";
  os << "closed form   = " << g.closed_form << "   (pi / (sqrt2 cosh(pi/2)))\n";
  os << "direct sum    = " << g.direct_sum << "   |diff| = " << std::scientific << std::setprecision(2)
     << std::abs(g.direct_sum - g.closed_form) << std::defaultfloat << std::setprecision(16) << "\n";
  os << "p1            = " << g.p1 << "   (pi sech(pi/2) = " << g.p1_closed_form << ")\n";
  os << "<phi3^2, T>   = " << g.phi3_sq_T_convolution << " (convolution), " << g.phi3_sq_T_spectral
     << " (Fourier)\n";
  os << "c0            = " << g.c0 << "\n";
  os << std::defaultfloat << std::setprecision(6);
}

}  // namespace fgr
