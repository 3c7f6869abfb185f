#include "fgr/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "fgr/direct.hpp"
#include "fgr/funcalg.hpp"

namespace fgr {

UnknownClaim::UnknownClaim(std::string_view id) : std::out_of_range("unknown claim '" + std::string(id) + "'") {}

CancellationFailure::CancellationFailure(BasisCombo residual)
    : std::runtime_error("Gamma does not reduce to (1/sqrt2) p1; residual " + residual.to_string()),
      residual_(std::move(residual)) {}

namespace {

using namespace profiles;

FieldElem q(long n, long d = 1) { return FieldElem(Rational(n, d)); }

FuncExpr select(const FuncExpr& e, bool (*keep)(const Monomial&)) {
  FuncExpr out;
  for (const auto& [m, c] : e.terms()) {
    if (keep(m)) out += FuncExpr(m, c);
  }
  return out;
}

// <left, h31> with the sech component of `left` dropped.
BasisCombo pair_h31(const FuncExpr& left, const FuncExpr& h) { return inner_product(strip_phi3_component(left), h); }

BasisCombo scaled(const FieldElem& c, const BasisCombo& b) { return c * b; }

FuncExpr E_logsech_part() {
  return select(strip_phi3_component(E()), [](const Monomial& m) { return m.logsech_pow > 0; });
}
FuncExpr E_x_part() {
  return select(strip_phi3_component(E()), [](const Monomial& m) { return m.x_pow > 0; });
}

// Coefficient of sech in F (and, with opposite log2 sign, in E).
const double kFsech = (2.0 * std::numbers::ln2 + 1.0) / (4.0 * std::numbers::sqrt2);

double sech2(double x) {
  const double s = sech_at(x);
  return s * s;
}

std::vector<ClaimDefinition> make_definitions() {
  using P = direct::Profiles;
  auto at = [](double x, const TValue& t) { return direct::profiles_at(x, t); };
  std::vector<ClaimDefinition> d;
  auto add = [&d](std::string id, std::function<BasisCombo()> build,
                  std::function<double(double, const TValue&)> direct_fn) {
    d.push_back({std::move(id), std::move(build), std::move(direct_fn), {}});
  };
  auto add_sum = [&d](std::string id, std::function<BasisCombo()> build, std::vector<int> gammas) {
    d.push_back({std::move(id), std::move(build), {}, std::move(gammas)});
  };

  // gamma_1 = 3<F xi1^2,h31> - <F xi2^2,h31> + <phi3 xi1^2,h31> + 6<phi3 xi1 R1,h31> - 2<phi3 xi2 R2,h31>
  add("gamma_111", [] { return scaled(q(3), pair_h31(F() * xi31() * xi31(), h31_cos_part())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return 3.0 * (p.F * p.xi1 * p.xi1 - kFsech * sech_at(x)) * p.h31_cos;
      });
  add("gamma_112", [] { return scaled(q(3), pair_h31(F() * xi31() * xi31(), h31_sin_part())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return 3.0 * (p.F * p.xi1 * p.xi1 - kFsech * sech_at(x)) * p.h31_sin;
      });
  add("gamma_121", [] { return scaled(q(-1), pair_h31(F() * xi32() * xi32(), h31_cos_part())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return -(p.F * p.xi2 * p.xi2 - kFsech * sech_at(x)) * p.h31_cos;
      });
  add("gamma_122", [] { return scaled(q(-1), pair_h31(F() * xi32() * xi32(), h31_sin_part())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return -(p.F * p.xi2 * p.xi2 - kFsech * sech_at(x)) * p.h31_sin;
      });
  add("gamma_131", [] { return pair_h31(phi3() * xi31() * xi31(), h31_cos_part()); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return (p.phi * p.xi1 * p.xi1 - p.phi) * p.h31_cos;
      });
  add("gamma_132", [] { return pair_h31(phi3() * xi31() * xi31(), h31_sin_part()); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return (p.phi * p.xi1 * p.xi1 - p.phi) * p.h31_sin;
      });
  add("gamma_141", [] { return scaled(q(6), pair_h31(phi3() * xi31() * R1(), h31_cos_part())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return 6.0 * p.phi * p.xi1 * p.R1 * p.h31_cos;
      });
  add("gamma_142", [] { return scaled(q(6), pair_h31(phi3() * xi31() * R1(), h31_sin_part())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return 6.0 * p.phi * p.xi1 * p.R1 * p.h31_sin;
      });
  add("gamma_151", [] { return scaled(q(-2), pair_h31(phi3() * xi32() * R2(), h31_cos_part())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return -2.0 * p.phi * p.xi2 * p.R2 * p.h31_cos;
      });
  add("gamma_152", [] { return scaled(q(-2), pair_h31(phi3() * xi32() * R2(), h31_sin_part())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return -2.0 * p.phi * p.xi2 * p.R2 * p.h31_sin;
      });
  add_sum("lemma_gamma1", [] { return build_gamma(1); }, {1});

  add("gamma_21", [] { return scaled(q(2), inner_product(F() * xi31() * xi32(), h32())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return 2.0 * p.F * p.xi1 * p.xi2 * p.h32;
      });
  add("gamma_22", [] { return scaled(q(2), inner_product(phi3() * R1() * xi32(), h32())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return 2.0 * p.phi * p.R1 * p.xi2 * p.h32;
      });
  add("gamma_23", [] { return scaled(q(2), inner_product(phi3() * xi31() * R2(), h32())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return 2.0 * p.phi * p.xi1 * p.R2 * p.h32;
      });
  add_sum("lemma_gamma2", [] { return build_gamma(2); }, {2});

  add("gamma_31",
      [] {
        return scaled(q(6), pair_h31(FuncExpr::x() * FuncExpr::tanh() * FuncExpr::sech(2) * phi3() * xi31() * xi32(),
                                     h31()));
      },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return 6.0 * x * std::tanh(x) * sech2(x) * p.phi * p.xi1 * p.xi2 * p.h31;
      });
  add("gamma_32", [] { return scaled(q(-7, 2), pair_h31(FuncExpr::sech(2) * phi3() * xi31() * xi32(), h31())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return -3.5 * sech2(x) * p.phi * p.xi1 * p.xi2 * p.h31;
      });
  add_sum("lemma_gamma3", [] { return build_gamma(3); }, {3});

  add("gamma_42", [] { return scaled(q(-2), inner_product(E_logsech_part(), h31())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return p.phi * (p.log_phi - 0.5 * std::numbers::ln2) * p.h31;
      });
  add("gamma_43", [] { return scaled(q(-2), inner_product(E_x_part(), h31())); },
      [at](double x, const TValue& t) {
        const P p = at(x, t);
        return -x * p.dphi * p.h31;
      });
  add_sum("lemma_gamma4", [] { return build_gamma(4); }, {4});

  for (int i = 1; i <= 4; ++i) add_sum("eq_gam" + std::to_string(i), [i] { return build_gamma(i); }, {i});
  auto total = [] { return build_gamma(1) + build_gamma(2) + build_gamma(3) + build_gamma(4); };
  add_sum("prop_1st", total, {1, 2, 3, 4});
  add_sum("thm_gamma", total, {1, 2, 3, 4});
  return d;
}

}  // namespace

BasisCombo build_gamma(int i) {
  switch (i) {
    case 1: return pair_h31(Delta1(), h31());
    case 2: return q(2) * inner_product(Delta2(), h32());
    case 3: return pair_h31(gamma3_weight() * phi3() * xi31() * xi32(), h31());
    case 4: return q(-2) * pair_h31(E(), h31());
    default: throw std::out_of_range("gamma index must be in 1..4");
  }
}

BasisCombo gamma_derived_eliminated() {
  BasisCombo sum;
  for (int i = 1; i <= 4; ++i) sum += build_gamma(i);
  return eliminate_derived(sum);
}

BasisCombo gamma_symbolic() {
  const BasisCombo reduced = reduce_full(gamma_derived_eliminated());
  const BasisCombo expected(BasisIntegral{Family::P, 1}, FieldElem::sqrt2() * q(1, 2));
  if (reduced != expected) throw CancellationFailure(reduced - expected);
  return reduced;
}

const std::vector<ClaimDefinition>& claim_definitions() {
  static const std::vector<ClaimDefinition> defs = make_definitions();
  return defs;
}

const ClaimDefinition* find_claim_definition(std::string_view id) {
  for (const auto& d : claim_definitions()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

std::string to_string(Adjudication a) {
  switch (a) {
    case Adjudication::Exact: return "exact";
    case Adjudication::FixtureTypo: return "fixture_typo";
    case Adjudication::PipelineError: return "pipeline_error";
    case Adjudication::Unresolved: return "unresolved";
  }
  return "unresolved";
}

Verifier::Verifier(QuadConfig cfg, FixtureSet fixtures, double numeric_tol)
    : fixtures_(std::move(fixtures)), quad_(cfg), numeric_tol_(numeric_tol) {}

VerificationReport Verifier::verify_claim(std::string_view id) const {
  const ClaimFixture* f = fixtures_.find(id);
  if (f == nullptr) throw UnknownClaim(id);
  return verify(*f);
}

VerificationReport Verifier::verify(const ClaimFixture& f) const {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = f.id;
  r.description = f.description;
  r.stage = f.stage;
  r.expected = f.expected;

  BasisCombo raw;
  std::optional<QuadResult> direct;
  if (f.input) {
    raw = *f.input;
    direct = quad_.eval_combo(*f.input);
  } else if (const ClaimDefinition* def = find_claim_definition(f.id)) {
    raw = def->build();
    if (def->direct) {
      direct = quad_.integrate_with_T(def->direct);
    } else if (!def->direct_gammas.empty()) {
      QuadResult sum;
      for (int i : def->direct_gammas) {
        const QuadResult g = quad_.eval_gamma_direct(i);
        sum.value += g.value;
        sum.error_estimate += g.error_estimate;
        sum.evaluations += g.evaluations;
      }
      direct = sum;
    }
  } else {
    r.anomalies.push_back("no construction known for this claim id");
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

  r.computed = reduce_to_stage(raw, f.stage);
  r.symbolic_residual = r.computed - r.expected;
  r.exact_match = r.symbolic_residual.empty();

  const QuadResult nc = quad_.eval_combo(r.computed);
  const QuadResult ne = quad_.eval_combo(r.expected);
  r.numeric_computed = nc.value;
  r.numeric_expected = ne.value;
  if (direct) {
    r.numeric_direct = direct->value;
    r.numeric_residual = std::abs(nc.value - direct->value);
    r.error_estimate = nc.error_estimate + direct->error_estimate;
  } else {
    r.numeric_residual = std::abs(nc.value - ne.value);
    r.error_estimate = nc.error_estimate + ne.error_estimate;
  }

  if (r.exact_match) {
    r.adjudication = Adjudication::Exact;
  } else if (direct) {
    const bool computed_ok = std::abs(nc.value - direct->value) < numeric_tol_;
    const bool expected_ok = std::abs(ne.value - direct->value) < numeric_tol_;
    if (computed_ok && !expected_ok) {
      r.adjudication = Adjudication::FixtureTypo;
    } else if (!computed_ok && expected_ok) {
      r.adjudication = Adjudication::PipelineError;
    }
  }

  for (const BasisCombo* c : {&r.computed, &r.expected}) {
    if (c->max_l_degree() >= 2) {
      r.anomalies.push_back("log2 of degree " + std::to_string(c->max_l_degree()) + " in " +
                            (c == &r.computed ? "computed" : "expected") + " combination");
    }
  }
  if (!within_standard_range(r.computed)) r.anomalies.push_back("computed combination uses an even index or k > 9");

  r.passed = r.exact_match && r.numeric_residual < numeric_tol_;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<VerificationReport> Verifier::verify_all(bool parallel) const {
  const auto& all = fixtures_.all();
  std::vector<VerificationReport> out(all.size());
  if (!parallel) {
    for (std::size_t i = 0; i < all.size(); ++i) out[i] = verify(all[i]);
    return out;
  }
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(all.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < all.size(); i = next++) out[i] = verify(all[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

GammaSummary Verifier::gamma_summary() const {
  GammaSummary g;
  g.symbolic = gamma_symbolic();
  const BasisIntegral p1{Family::P, 1};
  g.p1 = quad_.eval_basis(p1).value;
  g.numeric = to_double(g.symbolic.coefficient(p1)) * g.p1;
  g.p1_closed_form = std::numbers::pi / std::cosh(std::numbers::pi / 2);
  g.closed_form = g.p1_closed_form / std::numbers::sqrt2;
  for (int i = 1; i <= 4; ++i) {
    const QuadResult r = quad_.eval_gamma_direct(i);
    g.direct_sum += r.value;
    g.direct_error_estimate += r.error_estimate;
  }
  g.phi3_sq_T_convolution = quad_.phi3_sq_T_convolution().value;
  g.phi3_sq_T_spectral = quad_.phi3_sq_T_spectral().value;
  g.c0 = 0.25 + g.phi3_sq_T_convolution / (32.0 * std::numbers::sqrt2);
  return g;
}

}  // namespace fgr
