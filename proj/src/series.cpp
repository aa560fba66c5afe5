#include "guderley/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "guderley/errors.hpp"

namespace guderley {

double slope_bound_s(const Params& p, const PhasePoint& triple) {
  if (!(triple.V < 0.0) || !(triple.C > 0.0))
    throw domain_error("slope_bound_s expects a sonic triple with V < 0 < C");
  return (p.gamma - 1.0) * triple.C / (4.0 * triple.V);
}

OriginSeries series_coeffs(const Params& p, double v1, int N) {
  if (N < 2 || N > 400)
    throw domain_error("series order N out of range: " + std::to_string(N));
  if (!(v1 <= 0.0) || !std::isfinite(v1))
    throw domain_error("series slope parameter v1 must be <= 0, got " +
                       std::to_string(v1));

  const double g = p.gamma, z = p.z;
  const int m = p.m;
  const double mgz = m * g * z;

  std::vector<double> v(static_cast<size_t>(N) + 1, 0.0);
  v[1] = v1;
  v[2] = (-2.0 * m * z - 0.5 * m * (g - 1.0) * (1.0 - g * z) * v1 * v1) /
         (1.0 + mgz);

  // full convolution powers of the prefix computed so far
  std::vector<double> v2(v.size(), 0.0), v3(v.size(), 0.0), v4(v.size(), 0.0);
  auto refresh = [&](int upto) {
    for (int l = 2; l <= upto; ++l) {
      double s2 = 0.0;
      for (int i = 1; i < l; ++i) s2 += v[i] * v[l - i];
      v2[l] = s2;
    }
    for (int l = 3; l <= upto; ++l) {
      double s3 = 0.0;
      for (int i = 1; i <= l - 2; ++i) s3 += v[i] * v2[l - i];
      v3[l] = s3;
    }
    for (int l = 4; l <= upto; ++l) {
      double s4 = 0.0;
      for (int i = 1; i <= l - 3; ++i) s4 += v[i] * v3[l - i];
      v4[l] = s4;
    }
  };

  const double c31 = 3.0 * p.a1 - p.a2;
  const double c21 = 1.0 + mgz + 2.0 * p.a1 - p.a2;
  for (int l = 3; l <= N; ++l) {
    refresh(l);
    const double A = (1.0 + mgz) * (l - 1);
    double B = (1.0 - l * p.a1 / 4.0) * v4[l];
    B += (3.0 + mgz - l * c31 / 3.0) * v3[l];
    B += (3.0 + 2.0 * mgz - 0.5 * l * c21) * v2[l];
    B += (0.5 * (l - 2) - 1.0 - m) * v2[l - 2];
    B += ((1.0 + m * z) * (l - 2) - m - 1.0 - 2.0 * m * z) * v[l - 2];
    v[l] = B / A;
  }

  OriginSeries out;
  out.v = std::move(v);
  out.N = N;

  double inv_r = 0.0;
  for (int l = std::max(2, N - 9); l <= N; ++l) {
    const double a = std::abs(out.v[l]);
    if (a > 0.0) inv_r = std::max(inv_r, std::pow(a, 1.0 / l));
  }
  out.radius_est = (inv_r > 0.0) ? 1.0 / inv_r
                                 : std::numeric_limits<double>::infinity();
  return out;
}

SeriesEval series_eval(const OriginSeries& s, double C) {
  if (!(std::abs(C) < s.radius_est))
    throw convergence_error("series evaluated at |C| = " + std::to_string(C) +
                            " outside its convergence estimate " +
                            std::to_string(s.radius_est));
  double V = 0.0, dV = 0.0;
  for (int l = s.N; l >= 1; --l) {
    V = V * C + s.v[l];
    dV = dV * C + l * s.v[l];
  }
  V *= C;
  return {V, dV};
}

double match_v1(const Params& p, const PhasePoint& triple, double c1) {
  const double s = slope_bound_s(p, triple);
  const double slack = 1e-6 * std::abs(s);
  if (!(c1 < 0.0) || c1 > 2.0 * s + slack)
    throw convergence_error(
        "inbound slope c1 = " + std::to_string(c1) +
        " escapes (-inf, 2s] with s = " + std::to_string(s) +
        "; the similarity exponent upstream is suspect");
  return 1.0 / std::min(c1, 2.0 * s);
}

double handoff_radius(const OriginSeries& s) {
  const double cap = 0.3 * s.radius_est;
  const double aN = std::abs(s.v[s.N]);
  auto tail = [&](double d) {
    const double q = d / s.radius_est;
    return aN * std::pow(d, s.N) * q / (1.0 - q);
  };
  if (!(cap > 0.0)) throw convergence_error("series has no convergence radius");
  if (tail(cap) < 1e-12) return cap;
  double lo = 0.0, hi = cap;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tail(mid) < 1e-12 ? lo : hi) = mid;
  }
  if (lo == 0.0) throw convergence_error("series tail refuses to go below 1e-12");
  return lo;
}

} // namespace guderley
