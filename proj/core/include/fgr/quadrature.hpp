#pragma once

// Numerical oracle. Integrals over the real line are computed on the window
// [-X, X] by globally adaptive 21-point Gauss-Kronrod quadrature; the kernel
// T = exp(-sqrt2 |.|) * sech^2 is evaluated node by node as two one-sided
// convolution integrals, optionally memoized.

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "fgr/basis.hpp"
#include "fgr/funcalg.hpp"

namespace fgr {

enum class TStrategy { Convolution, ConvolutionCached };

struct QuadConfig {
  double abs_tol = 1e-10;
  double truncation_radius = 40.0;
  int max_refinement_depth = 30;
  TStrategy T_strategy = TStrategy::ConvolutionCached;

  /// Bound on the integral of 16 (1 + |x|) exp(-|x|) outside [-X, X], which
  /// dominates every integrand built from the ten families (and log sech).
  [[nodiscard]] double tail_bound() const;
  /// Throws std::invalid_argument unless abs_tol > 0, X > 0, depth >= 1 and
  /// tail_bound() < abs_tol / 10.
  void validate() const;
  /// Tolerance used for each one-sided T convolution.
  [[nodiscard]] double inner_tol() const;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Integrand = std::function<double(double)>;

/// Adaptive G10/K21 on [a, b], starting from panels of width <= initial_width
/// and bisecting the panel with the largest |K21 - G10| until the summed
/// estimate is below abs_tol. A round-off floor proportional to the summed
/// |K21| is included in the estimate.
QuadResult integrate_adaptive(const Integrand& f, double a, double b, double abs_tol, int max_depth,
                              double initial_width = 1.0);

struct TValue {
  double T = 0.0;
  double Tprime = 0.0;
  double error = 0.0;
};

// Pointwise generators, stable for large |x|.
double sech_at(double x);
double logsech_at(double x);
double monomial_at(const Monomial& m, double x, const TValue& t);
bool needs_T(const Monomial& m);

class Quadrature {
 public:
  explicit Quadrature(QuadConfig cfg = {});
  ~Quadrature();
  Quadrature(Quadrature&&) noexcept;
  Quadrature& operator=(Quadrature&&) noexcept;
  Quadrature(const Quadrature&) = delete;
  Quadrature& operator=(const Quadrature&) = delete;

  [[nodiscard]] const QuadConfig& config() const { return cfg_; }

  /// T(x) and T'(x); T' = sqrt2 (right - left) of the split convolution.
  [[nodiscard]] TValue T_at(double x) const;
  [[nodiscard]] QuadResult eval_T(double x) const;
  [[nodiscard]] QuadResult eval_Tprime(double x) const;

  /// Integral over [-X, X] of an arbitrary pointwise function.
  [[nodiscard]] QuadResult integrate(const Integrand& f) const;
  /// Same, with T and T' supplied at every node.
  [[nodiscard]] QuadResult integrate_with_T(const std::function<double(double, const TValue&)>& f) const;

  [[nodiscard]] QuadResult eval_monomial(const Monomial& m) const;
  /// Memoized per integral.
  [[nodiscard]] QuadResult eval_basis(BasisIntegral bi) const;
  [[nodiscard]] QuadResult eval_combo(const BasisCombo& c) const;
  /// Integral of a FuncExpr as a single pointwise integrand.
  [[nodiscard]] QuadResult eval_function(const FuncExpr& e) const;
  /// Literal integrand of gamma_i, i in 1..4.
  [[nodiscard]] QuadResult eval_gamma_direct(int i) const;

  /// <phi3^2, T> by quadrature of 2 sech^2 T with T from the convolution.
  [[nodiscard]] QuadResult phi3_sq_T_convolution() const;
  /// <phi3^2, T> from Plancherel: (1/pi) int (pi k / sinh(pi k/2))^2 2 sqrt2 / (2 + k^2) dk.
  [[nodiscard]] QuadResult phi3_sq_T_spectral() const;

  [[nodiscard]] std::size_t T_cache_size() const;
  [[nodiscard]] long T_computations() const;

 private:
  struct State;
  QuadConfig cfg_;
  std::unique_ptr<State> state_;
};

}  // namespace fgr
