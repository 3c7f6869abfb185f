#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <string>

#include "fgr/parse.hpp"
#include "fgr/pipeline.hpp"
#include "fgr/report.hpp"

namespace fgr::cli {

namespace {

enum class Command { VerifyAll, VerifyClaim, Reduce, Eval, Constants, Report };
enum class Format { Text, Json };

struct RunConfig {
  Command command = Command::VerifyAll;
  std::string argument;
  double tol = 1e-10;
  double truncation = 40.0;
  bool parallel = false;
  Format format = Format::Text;
  std::string json_path;
  std::string fixtures_path;
  std::string stage = "core";
};

QuadConfig quad_config(const RunConfig& cfg) {
  QuadConfig q;
  q.abs_tol = cfg.tol;
  q.truncation_radius = cfg.truncation;
  return q;
}

FixtureSet load_fixtures(const RunConfig& cfg) {
  return cfg.fixtures_path.empty() ? FixtureSet::builtin() : FixtureSet::load_file(cfg.fixtures_path);
}

void write_json(const RunConfig& cfg, const nlohmann::json& report, std::ostream& out) {
  const std::string text = dump_report(report);
  if (!cfg.json_path.empty()) {
    std::ofstream f(cfg.json_path);
    if (!f) throw std::runtime_error("cannot write " + cfg.json_path);
    f << text;
  }
  if (cfg.format == Format::Json) out << text;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Verifier v(quad_config(cfg), load_fixtures(cfg));
  std::vector<VerificationReport> reports;
  std::optional<GammaSummary> gamma;
  if (cfg.command == Command::VerifyClaim) {
    reports.push_back(v.verify_claim(cfg.argument));
  } else {
    reports = v.verify_all(cfg.parallel);
    gamma = v.gamma_summary();
  }
  const nlohmann::json report = make_report(reports, gamma, v.quadrature().config(), v.numeric_tol());
  if (cfg.format == Format::Text) {
    print_text(out, reports);
    if (gamma) print_text(out, *gamma);
    if (!report["passed"].get<bool>()) {
      out << "failed:";
      for (const auto& r : reports) {
        if (!r.passed) out << ' ' << r.id;
      }
      out << '\n';
    }
  }
  write_json(cfg, report, out);
  return report["passed"].get<bool>() ? kExitOk : kExitFailed;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  const BasisCombo c = parse_basis_expr(cfg.argument);
  const BasisCombo r = reduce_to_stage(c, stage_from_string(cfg.stage));
  if (cfg.format == Format::Json) {
    out << nlohmann::json{{"input", c.to_string()}, {"stage", cfg.stage}, {"result", r.to_json()}}.dump(2) << '\n';
  } else {
    out << r.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  std::optional<BasisCombo> combo;
  double value = 0.0;
  double estimate = 0.0;
  try {
    combo = parse_basis_expr(cfg.argument);
  } catch (const ParseError&) {
    // Not a combination; a pure coefficient such as "sqrt2*log2" is still accepted.
    value = to_double(parse_scalar_expr(cfg.argument));
  }
  if (combo) {
    const Quadrature q(quad_config(cfg));
    const QuadResult r = q.eval_combo(*combo);
    value = r.value;
    estimate = r.error_estimate;
  }
  if (cfg.format == Format::Json) {
    nlohmann::json j{{"value", value}, {"error_estimate", estimate}};
    if (combo) j["core"] = reduce_full(*combo).to_string();
    out << j.dump(2) << '\n';
  } else {
    out << std::setprecision(16) << value;
    if (combo) out << "  (estimate " << std::setprecision(2) << std::scientific << estimate << std::defaultfloat
                   << ")\ncore: " << reduce_full(*combo).to_string();
    out << '\n';
  }
  return kExitOk;
}

int cmd_constants(const RunConfig& cfg, std::ostream& out) {
  const Verifier v(quad_config(cfg));
  const GammaSummary g = v.gamma_summary();
  if (cfg.format == Format::Json) {
    out << to_json(g).dump(2) << '\n';
  } else {
    print_text(out, g);
  }
  return std::abs(g.direct_sum - g.closed_form) < v.numeric_tol() ? kExitOk : kExitFailed;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  std::ifstream f(cfg.argument);
  if (!f) throw std::runtime_error("cannot open " + cfg.argument);
  const nlohmann::json report = nlohmann::json::parse(f);
  if (cfg.format == Format::Json) {
    out << dump_report(report);
  } else {
    std::size_t failed = 0;
    for (const auto& c : report.at("claims")) {
      if (!c.at("passed").get<bool>()) {
        out << "FAIL " << c.at("id").get<std::string>() << '\n';
        ++failed;
      }
    }
    out << report.at("claims").size() - failed << "/" << report.at("claims").size() << " claims passed\n";
    if (report.contains("gamma")) out << "Gamma = " << report["gamma"].at("symbolic").get<std::string>() << '\n';
  }
  return report.at("passed").get<bool>() ? kExitOk : kExitFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact and numerical verification of the Fermi Golden Rule constant Gamma at p = 3", "fgrverify"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  app.add_option("--tol", cfg.tol, "Absolute quadrature tolerance per integral")
      ->envname("FGR_TOL")
      ->check(CLI::PositiveNumber);
  app.add_option("--truncation", cfg.truncation, "Integration window half-width X")
      ->envname("FGR_TRUNCATION")
      ->check(CLI::PositiveNumber);
  app.add_option("--json", cfg.json_path, "Also write the JSON report to this path")->envname("FGR_JSON");
  app.add_flag("--parallel", cfg.parallel, "Verify claims concurrently")->envname("FGR_PARALLEL");
  app.add_option("--format", cfg.format, "Output format")
      ->envname("FGR_FORMAT")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}},
                                          CLI::ignore_case));
  app.add_option("--fixtures", cfg.fixtures_path, "Fixture file to use instead of the built-in set")
      ->envname("FGR_FIXTURES")
      ->check(CLI::ExistingFile);
  app.fallthrough();

  std::string claim = "all";
  auto* verify = app.add_subcommand("verify", "Verify all claims or a single claim id");
  verify->add_option("claim", claim, "Claim id or 'all'");
  auto* reduce = app.add_subcommand("reduce", "Reduce a basis combination");
  reduce->add_option("expr", cfg.argument, "e.g. \"r3\" or \"2*sqrt2*b3 - b5\"")->required();
  reduce->add_option("--stage", cfg.stage, "Target stage")
      ->check(CLI::IsMember({"raw", "derived_eliminated", "core"}));
  auto* eval = app.add_subcommand("eval", "Evaluate a combination by quadrature");
  eval->add_option("expr", cfg.argument, "Basis combination or scalar")->required();
  auto* constants = app.add_subcommand("constants", "Print Gamma, p1 and c0");
  auto* report = app.add_subcommand("report", "Summarize a saved JSON report");
  report->add_option("path", cfg.argument, "Report file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (verify->parsed()) {
    cfg.command = claim == "all" ? Command::VerifyAll : Command::VerifyClaim;
    cfg.argument = claim;
  } else if (reduce->parsed()) {
    cfg.command = Command::Reduce;
  } else if (eval->parsed()) {
    cfg.command = Command::Eval;
  } else if (constants->parsed()) {
    cfg.command = Command::Constants;
  } else if (report->parsed()) {
    cfg.command = Command::Report;
  }

  try {
    switch (cfg.command) {
      case Command::VerifyAll:
      case Command::VerifyClaim: return cmd_verify(cfg, out);
      case Command::Reduce: return cmd_reduce(cfg, out);
      case Command::Eval: return cmd_eval(cfg, out);
      case Command::Constants: return cmd_constants(cfg, out);
      case Command::Report: return cmd_report(cfg, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownClaim& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FixtureError& e) {
    err << "fixtures: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "report: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonConvergence& e) {
    err << "quadrature: " << e.what() << '\n';
    return kExitFailed;
  } catch (const CancellationFailure& e) {
    err << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace fgr::cli
