#pragma once

#include <vector>

#include "guderley/params.hpp"
#include "guderley/phase_plane.hpp"

namespace guderley {

// Power series V(C) = sum_{l>=1} v[l] C^l of the outbound solution branch at
// the origin of the phase plane.  v1 parametrizes the one-parameter family;
// every later coefficient is determined by the recurrence.
struct OriginSeries {
  std::vector<double> v; // v[0] = 0, v[l] multiplies C^l
  int N = 0;
  double radius_est = 0.0;
};

// Bound on the inbound slope at the origin: s = (gamma-1) C* / (4 V*) < 0,
// where (V*, C*) is the sonic triple point the trajectory passed through.
double slope_bound_s(const Params& p, const PhasePoint& triple);

// Coefficients up to degree N; v1 must lie in [1/(2s), 0], which the caller
// asserts via match_v1 (series_coeffs itself only requires v1 <= 0).
OriginSeries series_coeffs(const Params& p, double v1, int N = 40);

struct SeriesEval {
  double V = 0.0;
  double dVdC = 0.0;
};

// Horner evaluation; throws convergence_error for |C| >= radius_est.
SeriesEval series_eval(const OriginSeries& s, double C);

// v1 = 1/c1 from the measured inbound slope c1 = lim C/V < 0; throws
// convergence_error when c1 is outside (-inf, 2s] (equivalently v1 outside
// [1/(2s), 0)), which signals a wrong similarity exponent upstream.
double match_v1(const Params& p, const PhasePoint& triple, double c1);

// Largest |C| whose estimated series tail stays below 1e-12, capped at
// 0.3 * radius_est.
double handoff_radius(const OriginSeries& s);

} // namespace guderley
