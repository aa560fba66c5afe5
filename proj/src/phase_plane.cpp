#include "guderley/phase_plane.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "guderley/detail/rootfind.hpp"
#include "guderley/errors.hpp"

namespace guderley {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Roots of a monic cubic x^3 + b x^2 + c x + d, all-real case resolved by the
// trigonometric formula, then polished with one Newton step each.
struct CubicRoots {
  std::array<double, 3> x{};
  int n = 0;
};

CubicRoots solve_cubic(double b, double c, double d) {
  CubicRoots out;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double off = -b / 3.0;
  const double disc = 0.25 * q * q + p * p * p / 27.0;
  if (disc <= 0.0) {
    // three real roots
    const double r = std::sqrt(std::max(-p / 3.0, 0.0));
    double arg = (r > 0.0) ? std::clamp(1.5 * q / (p * r), -1.0, 1.0) : 0.0;
    const double phi = std::acos(arg) / 3.0;
    out.n = 3;
    for (int k = 0; k < 3; ++k)
      out.x[k] = off + 2.0 * r * std::cos(phi - 2.0 * M_PI * k / 3.0);
    std::sort(out.x.begin(), out.x.begin() + 3);
  } else {
    const double s = std::sqrt(disc);
    const double u = std::cbrt(-0.5 * q + s);
    const double v = std::cbrt(-0.5 * q - s);
    out.n = 1;
    out.x[0] = off + u + v;
  }
  for (int k = 0; k < out.n; ++k) {
    double& x = out.x[k];
    for (int it = 0; it < 2; ++it) {
      const double f = ((x + b) * x + c) * x + d;
      const double fp = (3.0 * x + 2.0 * b) * x + c;
      if (fp != 0.0) x -= f / fp;
    }
  }
  return out;
}

double sq(double x) { return x * x; }

} // namespace

double g1(const Params& p, double V) { return (p.m + 1) * V + 2.0 * p.m * p.z; }

double g2(const Params& p, double V) { return V * (1.0 + V) * (p.lambda + V); }

double f1(const Params& p, double V) {
  if (V == -1.0) throw domain_error("f1 undefined at V = -1");
  return 1.0 + p.m * p.z / (1.0 + V);
}

double f2(const Params& p, double V) {
  const double h = 1.0 + V;
  return (p.a1 * h - p.a2) * h + p.a3;
}

double eval_D(const PhasePoint& q) { return sq(1.0 + q.V) - sq(q.C); }

double eval_G(const Params& p, const PhasePoint& q) {
  return sq(q.C) * g1(p, q.V) - g2(p, q.V);
}

double eval_F(const Params& p, const PhasePoint& q) {
  return q.C * (sq(q.C) * f1(p, q.V) - f2(p, q.V));
}

DFG eval_DFG(const Params& p, const PhasePoint& q) {
  return {eval_D(q), eval_F(p, q), eval_G(p, q)};
}

DFGGrad eval_DFG_grad(const Params& p, const PhasePoint& q) {
  const double V = q.V, C = q.C, h = 1.0 + V;
  DFGGrad g;
  g.DV = 2.0 * h;
  g.DC = -2.0 * C;
  // G = C^2 ((m+1)V + 2mz) - V(1+V)(lambda+V)
  g.GV = sq(C) * (p.m + 1) - (h * (p.lambda + V) + V * (p.lambda + V) + V * h);
  g.GC = 2.0 * C * g1(p, V);
  // F = C^3 (1 + mz/(1+V)) - C f2(V)
  if (h == 0.0) throw domain_error("phase gradient undefined at V = -1");
  g.FV = -C * sq(C) * p.m * p.z / sq(h) - C * (2.0 * p.a1 * h - p.a2);
  g.FC = 3.0 * sq(C) * f1(p, V) - f2(p, V);
  return g;
}

PhasePoint p1_state(double gamma) {
  return {-2.0 / (gamma + 1.0),
          std::sqrt(2.0 * gamma * (gamma - 1.0)) / (gamma + 1.0)};
}

CriticalPointSet critical_points(const Params& p) {
  const double g = p.gamma, z = p.z;
  double w2 = 1.0 - 2.0 * (g + 2.0) * z + sq((g - 2.0) * z);
  if (w2 < 0.0) {
    if (w2 > -1e-13)
      w2 = 0.0;
    else
      throw domain_error("z = " + std::to_string(z) +
                         " exceeds z_M: sonic triple points are not real");
  }
  const double w = std::sqrt(w2);

  CriticalPointSet S;
  S.w = w;
  S.P0 = {0.0, 0.0};
  S.P1 = p1_state(g);
  S.P2 = {-1.0, 0.0};
  S.P3 = {-p.lambda, 0.0};

  const double V6 = 0.5 * (-1.0 + (g - 2.0) * z - w);
  const double V8 = 0.5 * (-1.0 + (g - 2.0) * z + w);
  S.P6 = {V6, 1.0 + V6};
  S.P7 = {V6, -(1.0 + V6)};
  S.P8 = {V8, 1.0 + V8};
  S.P9 = {V8, -(1.0 + V8)};

  const double V4 = -2.0 * p.lambda / (g + 1.0 + p.m * (g - 1.0));
  const double den = g1(p, V4);
  const double c42 = (den != 0.0) ? g2(p, V4) / den : -1.0;
  if (c42 >= 0.0) {
    S.p45_real = true;
    const double C4 = std::sqrt(c42);
    S.P4 = {V4, C4};
    S.P5 = {V4, -C4};
  } else {
    S.p45_real = false;
    S.P4 = {V4, kNaN};
    S.P5 = {V4, kNaN};
  }

  S.Vbar_inf = -2.0 * p.m * p.z / (p.m + 1);

  // blocking point: the more negative of C5, C9 (P9 when P5 is not real)
  if (S.p45_real && S.P9.C >= S.P5.C)
    S.ring = S.P5;
  else
    S.ring = S.P9;
  S.ringC = S.ring.C;
  return S;
}

namespace {

double z_M_of(double gamma) { return 1.0 / sq(std::sqrt(2.0) + std::sqrt(gamma)); }

double z_g_of(double gamma, int m) {
  if (m == 1) {
    return (std::sqrt(sq(gamma) + sq(gamma - 1.0)) - gamma) /
           (gamma * (gamma - 1.0));
  }
  const double b = 2.0 * sq(gamma) - gamma + 1.0;
  const double a = 4.0 * gamma * (gamma - 1.0) + 8.0 / 3.0;
  const double c = 2.0 * gamma * (gamma - 1.0);
  return (std::sqrt(sq(b) + c * a) - b) / (gamma * a);
}

// gamma_g(m): where V4 meets the double sonic point, i.e. the w-part of the
// triple hit by V4(z_g) changes branch.
double gamma_g_mismatch(double gamma, int m) {
  const double zg = z_g_of(gamma, m);
  const double lam = 1.0 + m * gamma * zg;
  const double V4 = -2.0 * lam / (gamma + 1.0 + m * (gamma - 1.0));
  return 2.0 * V4 + 1.0 - (gamma - 2.0) * zg;
}

double gamma_g_of(int m) {
  static double cache[3] = {kNaN, kNaN, kNaN};
  if (std::isnan(cache[m])) {
    cache[m] = detail::brent_eval(
        [m](double g) { return gamma_g_mismatch(g, m); }, 2.5, 3.0, 0.0, 1e-15);
  }
  return cache[m];
}

double gamma_u_poly(double g, int m) {
  if (m == 1) {
    return ((((25.0 * g - 245.0) * g - 546.0) * g + 5016.0) * g - 15625.0) * g +
           15625.0;
  }
  return ((((((450.0 * g - 4860.0) * g + 6432.0) * g + 39111.0) * g -
            207817.0) * g + 359749.0) * g - 275503.0) * g + 110250.0;
}

double gamma_u_of(int m) {
  static double cache[3] = {kNaN, kNaN, kNaN};
  if (std::isnan(cache[m])) {
    const double lo = (m == 1) ? 79.0 / 50.0 : 77.0 / 50.0;
    const double hi = (m == 1) ? 159.0 / 100.0 : 31.0 / 20.0;
    cache[m] = detail::brent_eval(
        [m](double g) { return gamma_u_poly(g, m); }, lo, hi, 0.0, 1e-15);
  }
  return cache[m];
}

} // namespace

SpecialZ special_z(double gamma, int m, double gamma_star) {
  if (!(gamma > 1.0) || !(gamma <= 3.0))
    throw domain_error("gamma must lie in (1, 3], got " + std::to_string(gamma));
  if (m != 1 && m != 2)
    throw domain_error("m must be 1 or 2, got " + std::to_string(m));

  SpecialZ s;
  s.z_M = z_M_of(gamma);
  s.z_g = z_g_of(gamma, m);
  s.z_0 = (22.0 - 5.0 * gamma) / 125.0;
  s.gamma_g = gamma_g_of(m);
  s.gamma_u = gamma_u_of(m);

  if (gamma <= 2.0) {
    s.Zring_P6 = {s.z_g, s.z_M, false};
  }
  if (gamma > gamma_star) {
    const double lo =
        (gamma <= 1.0 + std::sqrt(2.0))
            ? (std::sqrt(5.0) - 1.0) / (2.0 * (1.0 + std::sqrt(5.0) + gamma))
            : (std::sqrt(33.0) - 3.0) /
                  (6.0 + 2.0 * std::sqrt(33.0) + 4.0 * gamma);
    s.Zring_P8 = {lo, s.z_M, false};
  }
  return s;
}

double branch_VF_plus(const Params& p, double C) {
  const CriticalPointSet S = critical_points(p);
  const double C9 = S.P9.C;
  if (!(C <= C9))
    throw domain_error("branch_VF_plus needs C <= C9 = " + std::to_string(C9) +
                       ", got " + std::to_string(C));
  // (1+V) f2(V) = C^2 (1 + V + m z) as a cubic in V
  const double mgz = p.m * p.gamma * p.z;
  const double b3 = -p.a1;
  const double b2 = -(3.0 * p.a1 - p.a2);
  const double b1 = sq(C) - (1.0 + mgz + 2.0 * p.a1 - p.a2);
  const double b0 = sq(C) * (1.0 + p.m * p.z) - (1.0 + mgz);
  const CubicRoots r = solve_cubic(b2 / b3, b1 / b3, b0 / b3);
  const double V8 = S.P8.V;
  double best = kNaN;
  for (int k = 0; k < r.n; ++k) {
    if (r.x[k] >= V8 - 1e-9 && (std::isnan(best) || r.x[k] < best))
      best = r.x[k];
  }
  if (std::isnan(best))
    throw convergence_error("branch_VF_plus: no root at or above V8");
  return std::max(best, V8);
}

namespace {

CubicRoots vg_roots(const Params& p, double C) {
  // V^3 + (1+lambda) V^2 + (lambda - C^2 (m+1)) V - 2 m z C^2 = 0
  return solve_cubic(1.0 + p.lambda, p.lambda - sq(C) * (p.m + 1),
                     -2.0 * p.m * p.z * sq(C));
}

} // namespace

double branch_VG_minus(const Params& p, double C) {
  const CubicRoots r = vg_roots(p, C);
  if (r.n != 3) throw domain_error("G = 0 has fewer than three real branches here");
  return r.x[0];
}

double branch_VG(const Params& p, double C) {
  const CubicRoots r = vg_roots(p, C);
  if (r.n != 3) throw domain_error("G = 0 has fewer than three real branches here");
  return r.x[1];
}

double branch_VG_plus(const Params& p, double C) {
  const CubicRoots r = vg_roots(p, C);
  if (r.n != 3) throw domain_error("G = 0 has fewer than three real branches here");
  return r.x[2];
}

} // namespace guderley
