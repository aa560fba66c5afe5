#pragma once

namespace guderley {

// Similarity parameters for a perfect gas with adiabatic index gamma in (1,3]
// and symmetry m (1 = cylindrical, 2 = spherical).  The similarity exponent
// lambda > 1 enters through z = (lambda - 1) / (m * gamma); a1..a3 are the
// coefficients of the quadratic f2 used by the phase-plane functions.
struct Params {
  double gamma = 0.0;
  int m = 0;
  double lambda = 0.0;
  double z = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

// Validates gamma in (1,3], m in {1,2}, lambda > 1 and precomputes z, a1..a3.
// Throws domain_error naming the offending field.
Params make_params(double gamma, int m, double lambda);

// Same validation, parametrized by z > 0 instead of lambda.
Params params_from_z(double gamma, int m, double z);

} // namespace guderley
