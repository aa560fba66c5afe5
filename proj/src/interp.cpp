#include "guderley/interp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "guderley/errors.hpp"
#include "guderley/ode.hpp"

namespace guderley {

namespace {

double hermite(double a0, double a1, double d0, double d1, double s0,
               double s1, double a) {
  const double h = a1 - a0;
  const double u = (a - a0) / h;
  const double u2 = u * u;
  const double u3 = u2 * u;
  return d0 * (2.0 * u3 - 3.0 * u2 + 1.0) + d1 * (3.0 * u2 - 2.0 * u3) +
         h * (s0 * (u3 - 2.0 * u2 + u) + s1 * (u3 - u2));
}

// Solves hermite(a) = target on [a0, a1] for data that is monotone across
// the interval: bisection bracket with a secant step inside it.
double invert_hermite(double a0, double a1, double d0, double d1, double s0,
                      double s1, double target) {
  if (d0 == d1) return a0;
  double lo = a0;
  double hi = a1;
  double flo = d0 - target;
  double fhi = d1 - target;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    return std::abs(flo) < std::abs(fhi) ? lo : hi;
  const double atol = 1e-15 * (1.0 + std::abs(a0) + std::abs(a1));
  for (int it = 0; it < 120; ++it) {
    double a = lo + (hi - lo) * (-flo / (fhi - flo));
    const double margin = 0.01 * (hi - lo);
    a = std::clamp(a, std::min(lo, hi) + std::abs(margin),
                   std::max(lo, hi) - std::abs(margin));
    if (!(std::abs(hi - lo) > atol)) break;
    const double f = hermite(a0, a1, d0, d1, s0, s1, a) - target;
    if (f == 0.0) return a;
    if ((f > 0.0) == (flo > 0.0)) {
      lo = a;
      flo = f;
    } else {
      hi = a;
      fhi = f;
    }
  }
  return 0.5 * (lo + hi);
}

std::size_t locate(const Trajectory& t, double (*key)(const Trajectory&, std::size_t),
                   double v, const char* what) {
  const std::size_t n = t.size();
  const double k0 = key(t, 0);
  const double k1 = key(t, n - 1);
  const bool inc = k1 > k0;
  const double klo = inc ? k0 : k1;
  const double khi = inc ? k1 : k0;
  if (!(v >= klo && v <= khi)) {
    const double tol = 1e-12 * (1.0 + std::abs(klo) + std::abs(khi));
    if (v < klo - tol || v > khi + tol) throw domain_error(what);
  }
  std::size_t lo = 0;
  std::size_t hi = n - 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if ((key(t, mid) <= v) == inc)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

double key_C(const Trajectory& t, std::size_t i) { return t.samples[i].C; }
double key_lnx(const Trajectory& t, std::size_t i) { return t.lnx[i]; }

struct IntervalData {
  double a0, a1;  // active variable at the ends
  double d0, d1;  // dependent phase variable
};

IntervalData interval_data(const Trajectory& t, std::size_t i) {
  const PhasePoint& q0 = t.samples[i];
  const PhasePoint& q1 = t.samples[i + 1];
  if (t.ivals[i].axis == Axis::V) return {q0.V, q1.V, q0.C, q1.C};
  return {q0.C, q1.C, q0.V, q1.V};
}

// True slope of lnR with respect to the active variable: the quadrature part
// plus the exact -dln(1+V) term carried outside it.
double lnR_slope(const Params& p, const Trajectory& t, std::size_t i, bool right) {
  const std::size_t s = right ? i + 1 : i;
  const PhasePoint& q = t.samples[s];
  const Axis axis = t.ivals[i].axis;
  const double dVda =
      axis == Axis::V ? 1.0 : (right ? t.ivals[i].slope1 : t.ivals[i].slope0);
  return detail::lnR_integrand(p, q, axis) - dVda / (1.0 + q.V);
}

TrajState finish(const Params& p, const Trajectory& t, std::size_t i,
                 double a, const IntervalData& d) {
  const TrajInterval& iv = t.ivals[i];
  TrajState out;
  out.ival = i;
  const double dep = hermite(d.a0, d.a1, d.d0, d.d1, iv.slope0, iv.slope1, a);
  if (iv.axis == Axis::V)
    out.q = {a, dep};
  else
    out.q = {dep, a};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (t.has_x()) {
    const double s0 = detail::lnx_integrand(p, t.samples[i], iv.axis);
    const double s1 = detail::lnx_integrand(p, t.samples[i + 1], iv.axis);
    out.lnx = hermite(d.a0, d.a1, t.lnx[i], t.lnx[i + 1], s0, s1, a);
  } else {
    out.lnx = nan;
  }
  if (t.has_R()) {
    const double s0 = lnR_slope(p, t, i, false);
    const double s1 = lnR_slope(p, t, i, true);
    out.lnR = hermite(d.a0, d.a1, t.lnR[i], t.lnR[i + 1], s0, s1, a);
  } else {
    out.lnR = nan;
  }
  return out;
}

} // namespace

TrajState eval_at_C(const Params& p, const Trajectory& t, double C) {
  if (t.size() < 2) throw domain_error("eval_at_C: trajectory has no intervals");
  const std::size_t i = locate(t, key_C, C, "eval_at_C: C outside the branch");
  const TrajInterval& iv = t.ivals[i];
  const IntervalData d = interval_data(t, i);
  double a;
  if (iv.axis == Axis::C)
    a = std::clamp(C, std::min(d.a0, d.a1), std::max(d.a0, d.a1));
  else
    a = invert_hermite(d.a0, d.a1, d.d0, d.d1, iv.slope0, iv.slope1, C);
  TrajState out = finish(p, t, i, a, d);
  out.q.C = C;
  return out;
}

TrajState eval_at_lnx(const Params& p, const Trajectory& t, double lnx) {
  if (t.size() < 2) throw domain_error("eval_at_lnx: trajectory has no intervals");
  if (!t.has_x()) throw domain_error("eval_at_lnx: branch has no x annotation");
  const std::size_t i = locate(t, key_lnx, lnx, "eval_at_lnx: x outside the branch");
  const TrajInterval& iv = t.ivals[i];
  const IntervalData d = interval_data(t, i);
  const double s0 = detail::lnx_integrand(p, t.samples[i], iv.axis);
  const double s1 = detail::lnx_integrand(p, t.samples[i + 1], iv.axis);
  const double a =
      invert_hermite(d.a0, d.a1, t.lnx[i], t.lnx[i + 1], s0, s1, lnx);
  TrajState out = finish(p, t, i, a, d);
  out.lnx = lnx;
  return out;
}

} // namespace guderley
