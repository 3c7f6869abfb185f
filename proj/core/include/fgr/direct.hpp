#pragma once

// Pointwise values of the profiles at p = 3, evaluated from their defining
// formulas (phi3, phi3', log phi3) and never through the formal algebra.

#include "fgr/quadrature.hpp"

namespace fgr::direct {

struct Profiles {
  double phi, dphi, log_phi;
  double xi1, xi2;
  double E, F;
  double R1, R2;
  double h31_cos, h31_sin, h31, h32;
  double Delta1, Delta2;
};

Profiles profiles_at(double x, const TValue& t);

/// Integrand of gamma_i (i in 1..4) at x.
double gamma_integrand(int i, double x, const TValue& t);

}  // namespace fgr::direct
