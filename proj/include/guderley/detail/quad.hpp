#pragma once

#include <cmath>

namespace guderley::detail {

// 5-point Gauss-Legendre rule on [-1, 1].
inline constexpr double kGLNode[5] = {-0.9061798459386640, -0.5384693101056831,
                                      0.0, 0.5384693101056831,
                                      0.9061798459386640};
inline constexpr double kGLWeight[5] = {0.2369268850561891, 0.4786286704993665,
                                        0.5688888888888889, 0.4786286704993665,
                                        0.2369268850561891};

template <class G>
double gl5(G&& g, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int k = 0; k < 5; ++k) s += kGLWeight[k] * g(mid + half * kGLNode[k]);
  return s * half;
}

// Panel-splitting refinement until the two-half estimate stabilizes within
// eps_abs plus a relative margin.  eps_abs is the caller's absolute error
// budget for the whole integral: keeping it realistic matters near removable
// singularities, where the integrand's roundoff noise would otherwise drive
// the recursion to the depth cap without gaining accuracy.
template <class G>
double adaptive_gl5(G&& g, double a, double b, double eps_abs = 1e-15,
                    int depth = 0) {
  const double whole = gl5(g, a, b);
  const double mid = 0.5 * (a + b);
  const double split = gl5(g, a, mid) + gl5(g, mid, b);
  if (std::abs(split - whole) <= eps_abs + 1e-13 * std::abs(split) ||
      depth >= 24)
    return split;
  return adaptive_gl5(g, a, mid, eps_abs, depth + 1) +
         adaptive_gl5(g, mid, b, eps_abs, depth + 1);
}

} // namespace guderley::detail
