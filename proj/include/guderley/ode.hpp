#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "guderley/params.hpp"
#include "guderley/trajectory.hpp"

namespace guderley {

// Zero-crossing detectors evaluated along the integrated curve.
//   sonic_cross  : D = (1+V)^2 - C^2 changes sign (either sonic line)
//   G_zero_cross : G changes sign
//   F_zero_cross : F changes sign
//   line_cross   : C + kappa (1+V) changes sign
struct EventSpec {
  EventKind kind = EventKind::sonic_cross;
  double kappa = 0.0;
  bool terminal = false;
  int direction = 0; // 0: any crossing; +1 rising only; -1 falling only
};

// Terminal coordinate conditions.
struct StopSpec {
  enum class What { V_reaches, C_reaches, ball_around };
  What what = What::V_reaches;
  double value = 0.0;    // V_reaches / C_reaches target
  PhasePoint center;     // ball_around
  double radius = 0.0;
};

struct IntegrateOptions {
  double rtol = 1e-11;
  double atol = 1e-13;
  int max_steps = 200000;
  double max_dstep = 0.05; // cap on one step of the active variable
  Axis axis0 = Axis::V;
  int dir0 = +1;           // direction of the active variable at the start
};

// Adaptive integration of dC/dV = F/G in the phase plane, switching between
// the V- and C-parametrization when the slope leaves [1/1.1, 1.1] in
// magnitude.  start_slope_hint supplies dC/dV where F/G is 0/0 (stepping off
// a critical point).  Throws convergence_error on step underflow (with the
// location) or an exhausted step budget.
Trajectory integrate_phase(const Params& p, PhasePoint start,
                           std::optional<double> start_slope_hint,
                           const std::vector<EventSpec>& events,
                           const std::vector<StopSpec>& stops,
                           const IntegrateOptions& opt = {});

// x- and R-annotation along an integrated trajectory.
//   dln|x| = -lambda D / G dV = -lambda D / F dC
//   dlnR   = -(m+1) V D / ((1+V) Q) d(axis) - dln(1+V),  Q = G or F
// The anchor fixes the value at one sample; both directions are filled by
// per-interval Gauss-Legendre quadrature over the dense output.
struct XAnchor {
  std::size_t index = 0;
  double x0 = 0.0; // signed; sign is recorded in Trajectory::x_sign
};

struct RAnchor {
  std::size_t index = 0;
  double R0 = 1.0;
};

void attach_x(const Params& p, Trajectory& traj, XAnchor anchor);
void attach_R(const Params& p, Trajectory& traj, RAnchor anchor);

namespace detail {
// Pointwise integrands of the two annotations, exposed for the terminal
// (origin) quadratures that continue them through x = 0.
double lnx_integrand(const Params& p, const PhasePoint& q, Axis axis);
double lnR_integrand(const Params& p, const PhasePoint& q, Axis axis);
} // namespace detail

} // namespace guderley
