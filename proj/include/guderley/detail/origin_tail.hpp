#pragma once

#include "guderley/params.hpp"
#include "guderley/phase_plane.hpp"
#include "guderley/series.hpp"

namespace guderley::detail {

// Logarithmic derivative of |V/x| along the origin series, in the C
// parametrization.  With N = G + lambda V D organized so no cancellation
// survives, d(ln|V/x|)/dV = N / (V G); the factor S'(C) converts the
// variable.  The limit at C = 0 is finite from either side, which is what
// lets ln|x| be carried across the origin.
inline double dlnVx_dC(const Params& p, const OriginSeries& s, double C) {
  const SeriesEval e = series_eval(s, C);
  const PhasePoint q{e.V, C};
  const double G = eval_G(p, q);
  const double N = C * C * ((p.m + 1 - p.lambda) * e.V + 2.0 * p.m * p.z) +
                   e.V * e.V * (1.0 + e.V) * (p.lambda - 1.0);
  return N / (e.V * G) * e.dVdC;
}

// Logarithmic derivative of R (1+V) along the origin series, again in C.
// This is d(ln R)/dV = -(m+1) V D / ((1+V) G) - d ln(1+V)/dV with the
// second term telescoped into the quantity itself.
inline double dlnR1V_dC(const Params& p, const OriginSeries& s, double C) {
  const SeriesEval e = series_eval(s, C);
  const PhasePoint q{e.V, C};
  return -(p.m + 1) * (e.V / eval_G(p, q)) * eval_D(q) / (1.0 + e.V) * e.dVdC;
}

} // namespace guderley::detail
