#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "guderley/detail/dp45.hpp"
#include "guderley/detail/quad.hpp"
#include "guderley/errors.hpp"
#include "guderley/ode.hpp"
#include "guderley/phase_plane.hpp"

namespace guderley {

namespace detail {

double lnx_integrand(const Params& p, const PhasePoint& q, Axis axis) {
  const DFG d = eval_DFG(p, q);
  return -p.lambda * d.D / (axis == Axis::V ? d.G : d.F);
}

double lnR_integrand(const Params& p, const PhasePoint& q, Axis axis) {
  const DFG d = eval_DFG(p, q);
  const double den = (axis == Axis::V ? d.G : d.F) * (1.0 + q.V);
  return -(p.m + 1) * q.V * d.D / den;
}

} // namespace detail

namespace {

using detail::kGLNode;

struct DenseInterval {
  const Params* p;
  Axis axis;
  double t0, dt; // active variable, signed width
  double y0, y1, m0h, m1h;

  PhasePoint at(double theta) const {
    const double y = detail::hermite(y0, m0h, y1, m1h, theta);
    const double t = t0 + theta * dt;
    return axis == Axis::V ? PhasePoint{t, y} : PhasePoint{y, t};
  }
};

DenseInterval dense_interval(const Params& p, const Trajectory& traj,
                             std::size_t i) {
  const TrajInterval& iv = traj.ivals[i];
  const PhasePoint& a = traj.samples[i];
  const PhasePoint& b = traj.samples[i + 1];
  DenseInterval d;
  d.p = &p;
  d.axis = iv.axis;
  if (iv.axis == Axis::V) {
    d.t0 = a.V;
    d.dt = b.V - a.V;
    d.y0 = a.C;
    d.y1 = b.C;
  } else {
    d.t0 = a.C;
    d.dt = b.C - a.C;
    d.y0 = a.V;
    d.y1 = b.V;
  }
  d.m0h = iv.slope0 * d.dt;
  d.m1h = iv.slope1 * d.dt;
  return d;
}

// The lnx and lnR integrands share a G (V-axis) resp. F (C-axis) denominator;
// a sign change strictly inside an interval means the quadrature straddles a
// pole.  A zero at an interval endpoint (a critical-point seam) is fine: the
// probe nodes are interior.
void check_denominator(const DenseInterval& d) {
  double den[12];
  for (int k = 0; k < 5; ++k) {
    const PhasePoint qa = d.at(0.25 + 0.25 * kGLNode[k]);
    const PhasePoint qb = d.at(0.75 + 0.25 * kGLNode[k]);
    const DFG da = eval_DFG(*d.p, qa), db = eval_DFG(*d.p, qb);
    den[k] = d.axis == Axis::V ? da.G : da.F;
    den[5 + k] = d.axis == Axis::V ? db.G : db.F;
  }
  const DFG e0 = eval_DFG(*d.p, d.at(0.0)), e1 = eval_DFG(*d.p, d.at(1.0));
  den[10] = d.axis == Axis::V ? e0.G : e0.F;
  den[11] = d.axis == Axis::V ? e1.G : e1.F;

  double scale = 0.0;
  for (double v : den) scale = std::max(scale, std::abs(v));
  const double dead = 1e-12 * scale;
  // A seam endpoint sits on a critical point only up to the rounding in its
  // computed coordinates, so the endpoint probes get a looser dead band.
  const double dead_end = 1e-9 * scale;
  const int order[12] = {10, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11};
  int last_sign = 0;
  for (int idx : order) {
    const double v = den[idx];
    if (std::abs(v) <= (idx >= 10 ? dead_end : dead)) continue;
    const int s = v > 0.0 ? +1 : -1;
    if (last_sign != 0 && s != last_sign) {
      const PhasePoint q = d.at(0.5);
      throw convergence_error(
          std::string("annotation integrand crosses ") +
          (d.axis == Axis::V ? "G" : "F") + " = 0 inside an interval near " +
          "(V, C) = (" + std::to_string(q.V) + ", " + std::to_string(q.C) + ")");
    }
    last_sign = s;
  }
}

enum class Kind { x, R };

double interval_delta(const Params& p, const Trajectory& traj, std::size_t i,
                      Kind kind) {
  const DenseInterval d = dense_interval(p, traj, i);
  check_denominator(d);
  auto g = [&](double theta) {
    const PhasePoint q = d.at(theta);
    return kind == Kind::x ? detail::lnx_integrand(p, q, d.axis)
                           : detail::lnR_integrand(p, q, d.axis);
  };
  const double eps_abs =
      std::clamp(1e-15 / std::abs(d.dt), 1e-15, 1e-9);
  double delta = d.dt * detail::adaptive_gl5(g, 0.0, 1.0, eps_abs);
  if (kind == Kind::R)
    delta -= std::log1p(traj.samples[i + 1].V) - std::log1p(traj.samples[i].V);
  return delta;
}

std::vector<double> propagate(const Params& p, const Trajectory& traj,
                              std::size_t index, double v0, Kind kind) {
  const std::size_t n = traj.size();
  if (index >= n) throw domain_error("annotation anchor index out of range");
  if (traj.ivals.size() + 1 != n)
    throw domain_error("trajectory interval count does not match samples");
  std::vector<double> out(n, 0.0);
  out[index] = v0;
  for (std::size_t i = index; i + 1 < n; ++i)
    out[i + 1] = out[i] + interval_delta(p, traj, i, kind);
  for (std::size_t i = index; i-- > 0;)
    out[i] = out[i + 1] - interval_delta(p, traj, i, kind);
  return out;
}

} // namespace

void attach_x(const Params& p, Trajectory& traj, XAnchor anchor) {
  if (anchor.x0 == 0.0) throw domain_error("x anchor must be nonzero");
  traj.lnx = propagate(p, traj, anchor.index, std::log(std::abs(anchor.x0)),
                       Kind::x);
  traj.x_sign = anchor.x0 > 0.0 ? +1 : -1;
}

void attach_R(const Params& p, Trajectory& traj, RAnchor anchor) {
  if (!(anchor.R0 > 0.0)) throw domain_error("R anchor must be positive");
  for (const PhasePoint& q : traj.samples)
    if (!(q.V > -1.0))
      throw domain_error("R annotation needs 1 + V > 0 along the trajectory");
  traj.lnR = propagate(p, traj, anchor.index, std::log(anchor.R0), Kind::R);
}

} // namespace guderley
