#include "fgr/direct.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fgr::direct {

Profiles profiles_at(double x, const TValue& t) {
  constexpr double s2 = std::numbers::sqrt2;
  Profiles p{};
  const double th = std::tanh(x);
  p.phi = s2 * sech_at(x);
  p.dphi = -p.phi * th;
  p.log_phi = 0.5 * std::numbers::ln2 + logsech_at(x);
  const double dlog = p.dphi / p.phi;

  p.xi1 = 1.0 - p.phi * p.phi;
  p.xi2 = 1.0;

  p.E = 0.5 * p.phi * (0.25 - p.log_phi) + 0.5 * x * p.dphi;
  p.F = p.E + p.phi * p.log_phi;

  p.R1 = -x * p.phi * p.dphi - (3.0 - p.phi * p.phi) * t.T / (4.0 * s2) - dlog * t.Tprime / (2.0 * s2);
  p.R2 = 0.5 * p.phi * p.phi + 3.0 * t.T / (4.0 * s2) + dlog * t.Tprime / (2.0 * s2);

  p.h31_cos = 0.5 * p.phi * p.phi * std::cos(x);
  p.h31_sin = dlog * std::sin(x);
  p.h31 = p.h31_cos + p.h31_sin;
  p.h32 = dlog * std::sin(x);

  p.Delta1 = p.F * (3.0 * p.xi1 * p.xi1 - p.xi2 * p.xi2) + p.phi * p.xi1 * p.xi1 +
             6.0 * p.phi * p.xi1 * p.R1 - 2.0 * p.phi * p.xi2 * p.R2;
  p.Delta2 = p.F * p.xi1 * p.xi2 + p.phi * p.R1 * p.xi2 + p.phi * p.xi1 * p.R2;
  return p;
}

double gamma_integrand(int i, double x, const TValue& t) {
  const Profiles p = profiles_at(x, t);
  switch (i) {
    case 1: return p.Delta1 * p.h31;
    case 2: return 2.0 * p.Delta2 * p.h32;
    case 3: {
      const double s = sech_at(x);
      const double w = 6.0 * x * std::tanh(x) * s * s - 3.5 * s * s;
      return w * p.phi * p.xi1 * p.xi2 * p.h31;
    }
    case 4: return -2.0 * p.E * p.h31;
    default: throw std::out_of_range("gamma index must be in 1..4");
  }
}

}  // namespace fgr::direct
