#pragma once

// Rebuilds each claim from the profiles, compares it with its fixture exactly
// at the fixture's stage, and cross-checks numerically against the literal
// integrand.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fgr/basis.hpp"
#include "fgr/basisreduce.hpp"
#include "fgr/fixtures.hpp"
#include "fgr/quadrature.hpp"

namespace fgr {

class UnknownClaim : public std::out_of_range {
 public:
  explicit UnknownClaim(std::string_view id);
};

class CancellationFailure : public std::runtime_error {
 public:
  explicit CancellationFailure(BasisCombo residual);
  [[nodiscard]] const BasisCombo& residual() const { return residual_; }

 private:
  BasisCombo residual_;
};

/// gamma_i (i in 1..4) as a raw basis combination. Left factors paired with
/// h31 have their sech component removed (it pairs to zero).
BasisCombo build_gamma(int i);

/// Sum of the four gamma_i with b, c, d, e, f eliminated.
BasisCombo gamma_derived_eliminated();

/// Fully reduced Gamma; throws CancellationFailure unless it is exactly (1/sqrt2) p1.
BasisCombo gamma_symbolic();

/// How a claim is rebuilt from first principles.
struct ClaimDefinition {
  std::string id;
  /// Raw combination; the verifier reduces it to the fixture's stage.
  std::function<BasisCombo()> build;
  /// Literal integrand, or empty when the claim is checked via gamma_direct.
  std::function<double(double, const TValue&)> direct;
  /// For claims equal to a sum of gamma_i: the indices to integrate directly.
  std::vector<int> direct_gammas;
};

/// Definitions of every non-rule claim. Rule fixtures (with an `input`) need none.
const std::vector<ClaimDefinition>& claim_definitions();
const ClaimDefinition* find_claim_definition(std::string_view id);

enum class Adjudication { Exact, FixtureTypo, PipelineError, Unresolved };
std::string to_string(Adjudication a);

struct VerificationReport {
  std::string id;
  std::string description;
  Stage stage = Stage::Raw;
  bool exact_match = false;
  BasisCombo expected;
  BasisCombo computed;
  BasisCombo symbolic_residual;  // computed - expected
  double numeric_computed = 0.0;
  double numeric_expected = 0.0;
  std::optional<double> numeric_direct;
  double numeric_residual = 0.0;
  double error_estimate = 0.0;
  Adjudication adjudication = Adjudication::Unresolved;
  std::vector<std::string> anomalies;
  bool passed = false;
  double elapsed_ms = 0.0;
};

struct GammaSummary {
  BasisCombo symbolic;
  double numeric = 0.0;       // to_float(coefficient) * quadrature(p1)
  double closed_form = 0.0;   // pi / (sqrt2 cosh(pi/2))
  double direct_sum = 0.0;    // sum of the literal gamma_i integrals
  double direct_error_estimate = 0.0;
  double p1 = 0.0;
  double p1_closed_form = 0.0;  // pi sech(pi/2)
  double c0 = 0.0;
  double phi3_sq_T_convolution = 0.0;
  double phi3_sq_T_spectral = 0.0;
};

class Verifier {
 public:
  explicit Verifier(QuadConfig cfg = {}, FixtureSet fixtures = FixtureSet::builtin(),
                    double numeric_tol = 1e-8);

  [[nodiscard]] const FixtureSet& fixtures() const { return fixtures_; }
  [[nodiscard]] const Quadrature& quadrature() const { return quad_; }
  [[nodiscard]] double numeric_tol() const { return numeric_tol_; }

  /// Throws UnknownClaim.
  [[nodiscard]] VerificationReport verify_claim(std::string_view id) const;
  /// Reports in fixture order regardless of `parallel`.
  [[nodiscard]] std::vector<VerificationReport> verify_all(bool parallel = false) const;

  [[nodiscard]] GammaSummary gamma_summary() const;

 private:
  [[nodiscard]] VerificationReport verify(const ClaimFixture& f) const;

  FixtureSet fixtures_;
  Quadrature quad_;
  double numeric_tol_;
};

}  // namespace fgr
