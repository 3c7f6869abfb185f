#include "fgr/quadrature.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "fgr/direct.hpp"

namespace fgr {

namespace {

// Gauss-Kronrod 10/21 abscissae and weights (QUADPACK qk21).
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

constexpr double kRoundoffFactor = 50.0 * DBL_EPSILON;
constexpr std::size_t kMaxPanels = std::size_t{1} << 18;

struct Panel {
  double a, b;
  double kronrod, error, abs_kronrod;
  int depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk21(const Integrand& f, double a, double b, int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);
  double resg = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  resk *= h;
  resg *= h;
  resabs *= std::abs(h);
  return {a, b, resk, std::abs(resk - resg), resabs, depth};
}

}  // namespace

QuadResult integrate_adaptive(const Integrand& f, double a, double b, double abs_tol, int max_depth,
                              double initial_width) {
  if (!(b > a)) return {};
  const int n0 = std::max(1, static_cast<int>(std::ceil((b - a) / initial_width)));
  const double w = (b - a) / n0;
  std::vector<Panel> heap;
  heap.reserve(static_cast<std::size_t>(n0) * 4);
  long evals = 0;
  for (int i = 0; i < n0; ++i) {
    const double lo = a + i * w;
    const double hi = (i + 1 == n0) ? b : a + (i + 1) * w;
    heap.push_back(gk21(f, lo, hi, 0));
    evals += 21;
  }
  std::make_heap(heap.begin(), heap.end());

  double error = 0.0;
  double abs_value = 0.0;
  auto resum = [&] {
    error = 0.0;
    abs_value = 0.0;
    for (const Panel& p : heap) {
      error += p.error;
      abs_value += p.abs_kronrod;
    }
  };
  resum();

  std::size_t since_resum = 0;
  while (error + kRoundoffFactor * abs_value > abs_tol) {
    if (kRoundoffFactor * abs_value > abs_tol) {
      throw NonConvergence("round-off floor " + num(kRoundoffFactor * abs_value) +
                           " exceeds tolerance " + num(abs_tol));
    }
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    if (worst.depth >= max_depth || heap.size() >= kMaxPanels) {
      throw NonConvergence("adaptive quadrature did not converge on [" + num(a) + ", " +
                           num(b) + "]: estimate " + num(error) + " > " +
                           num(abs_tol));
    }
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gk21(f, worst.a, mid, worst.depth + 1);
    const Panel right = gk21(f, mid, worst.b, worst.depth + 1);
    evals += 42;
    error += left.error + right.error - worst.error;
    abs_value += left.abs_kronrod + right.abs_kronrod - worst.abs_kronrod;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
    if (++since_resum == 64) {
      resum();
      since_resum = 0;
    }
  }

  // Sum in panel order so the result does not depend on heap layout.
  std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double value = 0.0;
  resum();
  for (const Panel& p : heap) value += p.kronrod;
  return {value, error + kRoundoffFactor * abs_value, evals};
}

double QuadConfig::tail_bound() const {
  const double x = truncation_radius;
  return 32.0 * (2.0 + x) * std::exp(-x);
}

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
  if (!(truncation_radius > 0.0)) throw std::invalid_argument("truncation radius must be positive");
  if (max_refinement_depth < 1) throw std::invalid_argument("max refinement depth must be at least 1");
  if (!(tail_bound() < abs_tol / 10.0)) {
    throw std::invalid_argument("truncation radius " + num(truncation_radius) +
                                " too small for tolerance " + num(abs_tol) +
                                ": tail bound " + num(tail_bound()));
  }
}

double QuadConfig::inner_tol() const { return std::max(abs_tol / 100.0, 5e-14); }

double sech_at(double x) {
  const double e = std::exp(-std::abs(x));
  return 2.0 * e / (1.0 + e * e);
}

double logsech_at(double x) {
  const double ax = std::abs(x);
  if (ax > 20.0) return -ax + std::numbers::ln2 - std::log1p(std::exp(-2.0 * ax));
  return -std::log(std::cosh(x));
}

bool needs_T(const Monomial& m) { return m.T_pow != 0 || m.Tprime_pow != 0; }

double monomial_at(const Monomial& m, double x, const TValue& t) {
  double v = std::pow(sech_at(x), m.sech_pow);
  if (m.tanh_pow != 0) v *= std::pow(std::tanh(x), m.tanh_pow);
  if (m.x_pow != 0) v *= std::pow(x, m.x_pow);
  if (m.logsech_pow != 0) v *= std::pow(logsech_at(x), m.logsech_pow);
  if (m.T_pow != 0) v *= std::pow(t.T, m.T_pow);
  if (m.Tprime_pow != 0) v *= std::pow(t.Tprime, m.Tprime_pow);
  if (m.trig == Trig::Cos) v *= std::cos(x);
  if (m.trig == Trig::Sin) v *= std::sin(x);
  return v;
}

struct Quadrature::State {
  mutable std::shared_mutex t_mutex;
  std::unordered_map<double, TValue> t_cache;
  std::atomic<long> t_computations{0};

  mutable std::mutex basis_mutex;
  std::map<BasisIntegral, QuadResult> basis_cache;
};

Quadrature::Quadrature(QuadConfig cfg) : cfg_(cfg), state_(std::make_unique<State>()) { cfg_.validate(); }
Quadrature::~Quadrature() = default;
Quadrature::Quadrature(Quadrature&&) noexcept = default;
Quadrature& Quadrature::operator=(Quadrature&&) noexcept = default;

TValue Quadrature::T_at(double x) const {
  const bool cached = cfg_.T_strategy == TStrategy::ConvolutionCached;
  if (cached) {
    std::shared_lock lock(state_->t_mutex);
    auto it = state_->t_cache.find(x);
    if (it != state_->t_cache.end()) return it->second;
  }
  const double y = cfg_.truncation_radius;
  const double tol = cfg_.inner_tol();
  const double s2 = std::numbers::sqrt2;
  // Kink of the kernel at y = x; each side is smooth.
  QuadResult left = integrate_adaptive(
      [x, s2](double u) {
        const double s = sech_at(u);
        return std::exp(-s2 * (x - u)) * s * s;
      },
      -y, std::min(x, y), tol, cfg_.max_refinement_depth);
  QuadResult right = integrate_adaptive(
      [x, s2](double u) {
        const double s = sech_at(u);
        return std::exp(-s2 * (u - x)) * s * s;
      },
      std::max(x, -y), y, tol, cfg_.max_refinement_depth);
  state_->t_computations.fetch_add(1, std::memory_order_relaxed);
  TValue v{left.value + right.value, s2 * (right.value - left.value),
           left.error_estimate + right.error_estimate};
  if (cached) {
    std::unique_lock lock(state_->t_mutex);
    state_->t_cache.insert_or_assign(x, v);
  }
  return v;
}

QuadResult Quadrature::eval_T(double x) const {
  const TValue v = T_at(x);
  return {v.T, v.error, 0};
}

QuadResult Quadrature::eval_Tprime(double x) const {
  const TValue v = T_at(x);
  return {v.Tprime, std::numbers::sqrt2 * v.error, 0};
}

QuadResult Quadrature::integrate(const Integrand& f) const {
  const double x = cfg_.truncation_radius;
  QuadResult r = integrate_adaptive(f, -x, x, cfg_.abs_tol, cfg_.max_refinement_depth);
  r.error_estimate += cfg_.tail_bound();
  return r;
}

QuadResult Quadrature::integrate_with_T(const std::function<double(double, const TValue&)>& f) const {
  double worst_t_error = 0.0;
  QuadResult r = integrate([&](double x) {
    const TValue t = T_at(x);
    worst_t_error = std::max(worst_t_error, t.error);
    return f(x, t);
  });
  // |integrand| <= C sech with C of order one per unit coefficient; int 2 sech = 2 pi.
  r.error_estimate += 2.0 * std::numbers::pi * std::numbers::sqrt2 * worst_t_error;
  return r;
}

QuadResult Quadrature::eval_monomial(const Monomial& m) const {
  if (needs_T(m)) {
    return integrate_with_T([&m](double x, const TValue& t) { return monomial_at(m, x, t); });
  }
  return integrate([&m](double x) { return monomial_at(m, x, TValue{}); });
}

QuadResult Quadrature::eval_basis(BasisIntegral bi) const {
  {
    std::scoped_lock lock(state_->basis_mutex);
    auto it = state_->basis_cache.find(bi);
    if (it != state_->basis_cache.end()) return it->second;
  }
  QuadResult r = eval_monomial(defining_monomial(bi));
  std::scoped_lock lock(state_->basis_mutex);
  state_->basis_cache.emplace(bi, r);
  return r;
}

QuadResult Quadrature::eval_combo(const BasisCombo& c) const {
  QuadResult out;
  for (const auto& [bi, coeff] : c.terms()) {
    const QuadResult r = eval_basis(bi);
    const double w = to_double(coeff);
    out.value += w * r.value;
    out.error_estimate += std::abs(w) * r.error_estimate;
    out.evaluations += r.evaluations;
  }
  return out;
}

QuadResult Quadrature::eval_function(const FuncExpr& e) const {
  std::vector<std::pair<Monomial, double>> terms;
  bool with_T = false;
  for (const auto& [m, c] : e.terms()) {
    terms.emplace_back(m, to_double(c));
    with_T = with_T || needs_T(m);
  }
  if (terms.empty()) return {};
  auto eval = [&terms](double x, const TValue& t) {
    double s = 0.0;
    for (const auto& [m, c] : terms) s += c * monomial_at(m, x, t);
    return s;
  };
  if (with_T) return integrate_with_T(eval);
  return integrate([&eval](double x) { return eval(x, TValue{}); });
}

QuadResult Quadrature::eval_gamma_direct(int i) const {
  if (i < 1 || i > 4) throw std::out_of_range("gamma index must be in 1..4");
  return integrate_with_T([i](double x, const TValue& t) { return direct::gamma_integrand(i, x, t); });
}

QuadResult Quadrature::phi3_sq_T_convolution() const {
  return integrate_with_T([](double x, const TValue& t) {
    const double s = sech_at(x);
    return 2.0 * s * s * t.T;
  });
}

QuadResult Quadrature::phi3_sq_T_spectral() const {
  constexpr double pi = std::numbers::pi;
  const double two_root2 = 2.0 * std::numbers::sqrt2;
  return integrate([=](double k) {
    const double z = 0.5 * pi * k;
    // pi k / sinh(pi k / 2), the Fourier transform of sech^2.
    const double g = std::abs(z) < 1e-8 ? 2.0 : 2.0 * z / std::sinh(z);
    return (1.0 / pi) * g * g * two_root2 / (2.0 + k * k);
  });
}

std::size_t Quadrature::T_cache_size() const {
  std::shared_lock lock(state_->t_mutex);
  return state_->t_cache.size();
}

long Quadrature::T_computations() const { return state_->t_computations.load(); }

}  // namespace fgr
