#include "guderley/params.hpp"

#include <cmath>
#include <string>

#include "guderley/errors.hpp"

namespace guderley {

Params make_params(double gamma, int m, double lambda) {
  if (!std::isfinite(gamma) || gamma <= 1.0 || gamma > 3.0)
    throw domain_error("gamma must lie in (1, 3], got " + std::to_string(gamma));
  if (m != 1 && m != 2)
    throw domain_error("m must be 1 or 2, got " + std::to_string(m));
  if (!std::isfinite(lambda) || lambda <= 1.0)
    throw domain_error("lambda must exceed 1, got " + std::to_string(lambda));

  Params p;
  p.gamma = gamma;
  p.m = m;
  p.lambda = lambda;
  p.z = (lambda - 1.0) / (m * gamma);
  p.a1 = 1.0 + 0.5 * m * (gamma - 1.0);
  p.a2 = 0.5 * (m * (gamma - 1.0) + m * gamma * p.z * (gamma - 3.0));
  p.a3 = 0.5 * m * gamma * p.z * (gamma - 1.0);
  return p;
}

Params params_from_z(double gamma, int m, double z) {
  if (!std::isfinite(z) || z <= 0.0)
    throw domain_error("z must be positive, got " + std::to_string(z));
  if (m != 1 && m != 2)
    throw domain_error("m must be 1 or 2, got " + std::to_string(m));
  return make_params(gamma, m, 1.0 + m * gamma * z);
}

} // namespace guderley
