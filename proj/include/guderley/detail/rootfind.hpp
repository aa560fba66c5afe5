#pragma once

#include <algorithm>
#include <cmath>

#include "guderley/errors.hpp"

namespace guderley::detail {

// Brent's method on a sign-changing bracket [a,b].  Stops when the bracket
// shrinks below xtol + rtol*|x|.  Throws convergence_error on a bad bracket
// or exhausted budget.
template <class F>
double brent(F&& f, double a, double b, double fa, double fb,
             double xtol = 0.0, double rtol = 4e-16, int max_iter = 200) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw convergence_error("root bracket does not change sign");
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * rtol * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol || fb == 0.0) return b;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double s = fb / fa, p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        double u = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * u * (u - r) - (b - a) * (r - 1.0));
        q = (u - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (xm > 0.0 ? tol : -tol);
    fb = f(b);
  }
  throw convergence_error("root iteration budget exhausted");
}

template <class F>
double brent_eval(F&& f, double a, double b, double xtol = 0.0,
                  double rtol = 4e-16, int max_iter = 200) {
  const double fa = f(a), fb = f(b);
  return brent(static_cast<F&&>(f), a, b, fa, fb, xtol, rtol, max_iter);
}

} // namespace guderley::detail
