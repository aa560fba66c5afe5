#pragma once

namespace guderley::detail {

struct DP45Out {
  double y5 = 0.0;  // fifth-order solution at t + h
  double err = 0.0; // embedded fourth-order error estimate
  double k7 = 0.0;  // slope at (t + h, y5), reusable as the next k1
};

// One Dormand-Prince 5(4) step for a scalar ODE y' = f(t, y).
template <class F>
DP45Out dp45_step(F&& f, double t, double y, double h, double k1) {
  const double k2 = f(t + h / 5.0, y + h * (k1 / 5.0));
  const double k3 = f(t + 3.0 * h / 10.0, y + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
  const double k4 = f(t + 4.0 * h / 5.0,
                      y + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3));
  const double k5 =
      f(t + 8.0 * h / 9.0,
        y + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                 64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
  const double k6 =
      f(t + h, y + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 +
                        46732.0 / 5247.0 * k3 + 49.0 / 176.0 * k4 -
                        5103.0 / 18656.0 * k5));
  DP45Out out;
  out.y5 = y + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                    2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
  out.k7 = f(t + h, out.y5);
  const double y4 =
      y + h * (5179.0 / 57600.0 * k1 + 7571.0 / 16695.0 * k3 + 393.0 / 640.0 * k4 -
               92097.0 / 339200.0 * k5 + 187.0 / 2100.0 * k6 + 1.0 / 40.0 * out.k7);
  out.err = out.y5 - y4;
  return out;
}

// Cubic Hermite basis on [0,1] with end slopes scaled by the interval width.
inline double hermite(double y0, double m0h, double y1, double m1h, double s) {
  const double s2 = s * s, s3 = s2 * s;
  return (2.0 * s3 - 3.0 * s2 + 1.0) * y0 + (s3 - 2.0 * s2 + s) * m0h +
         (-2.0 * s3 + 3.0 * s2) * y1 + (s3 - s2) * m1h;
}

inline double hermite_deriv(double y0, double m0h, double y1, double m1h, double s) {
  const double s2 = s * s;
  return (6.0 * s2 - 6.0 * s) * y0 + (3.0 * s2 - 4.0 * s + 1.0) * m0h +
         (-6.0 * s2 + 6.0 * s) * y1 + (3.0 * s2 - 2.0 * s) * m1h;
}

} // namespace guderley::detail
