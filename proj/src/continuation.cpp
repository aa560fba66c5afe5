#include "guderley/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "guderley/detail/origin_tail.hpp"
#include "guderley/detail/quad.hpp"
#include "guderley/errors.hpp"
#include "guderley/ode.hpp"
#include "guderley/series.hpp"

namespace guderley {

namespace {

std::string point_str(const PhasePoint& q) {
  return "(V, C) = (" + std::to_string(q.V) + ", " + std::to_string(q.C) + ")";
}

} // namespace

Trajectory continue_through_origin(const Params& p, const CollapseSolution& cs) {
  // Mirror of the collapse-side stop: past the origin by the same margin,
  // well inside the series disc, so the seed state and slope are exact to
  // rounding.
  const double c0 = -std::min(1e-3, 0.1 * cs.triple_at.C);
  const double c_end =
      -std::max(2.0 * std::abs(c0), 0.5 * handoff_radius(cs.series));
  const SeriesEval e0 = series_eval(cs.series, c0);
  const PhasePoint start{e0.V, c0};

  std::vector<StopSpec> stops(1);
  stops[0].what = StopSpec::What::C_reaches;
  stops[0].value = c_end;
  Trajectory traj = integrate_phase(p, start, 1.0 / e0.dVdC, {}, stops);
  if (traj.events.empty() || traj.events.back().kind != EventKind::stop)
    throw convergence_error("restart on the x > 0 side did not reach C = " +
                            std::to_string(c_end) + " from " +
                            point_str(start));

  // ln|x| and ln R anchors across the origin: V/x -> v1 and R (1+V) -> R0
  // there, and the logarithmic derivatives of both quantities along the
  // series are integrable through C = 0.
  auto dphi = [&](double C) { return detail::dlnVx_dC(p, cs.series, C); };
  auto dpsi = [&](double C) { return detail::dlnR1V_dC(p, cs.series, C); };
  const double phi0 =
      std::log(cs.terminal.v1) + detail::adaptive_gl5(dphi, 0.0, c0);
  const double psi0 =
      std::log(cs.terminal.R0) + detail::adaptive_gl5(dpsi, 0.0, c0);
  attach_x(p, traj, XAnchor{0, e0.V / std::exp(phi0)});
  attach_R(p, traj, RAnchor{0, std::exp(psi0 - std::log1p(e0.V))});
  return traj;
}

ExtensionResult maximal_extension(const Params& p, const Trajectory& outbound) {
  if (outbound.samples.size() < 2 || !outbound.has_x() || !outbound.has_R() ||
      outbound.x_sign <= 0)
    throw domain_error(
        "maximal extension requires an x-annotated branch with x > 0");
  const PhasePoint resume = outbound.samples.back();
  if (!(resume.V > 0.0) || !(resume.C < 0.0))
    throw domain_error(
        "maximal extension must resume in the fourth quadrant, got " +
        point_str(resume));

  const TrajInterval& tail = outbound.ivals.back();
  IntegrateOptions opt;
  opt.axis0 = tail.axis;
  opt.dir0 = tail.dir;
  // The sonic endpoint recedes like |C_s| ~ (gamma-1)^{-1} as gamma drops
  // to 1, and the arc out to it is asymptotically straight, so the usual
  // step cap would burn the whole budget pacing it.
  opt.max_dstep = 1.0;
  std::vector<EventSpec> events = {{EventKind::sonic_cross, 0.0, true, 0},
                                   {EventKind::G_zero_cross, 0.0, false, 0}};
  Trajectory ext =
      integrate_phase(p, resume, std::nullopt, events, {}, opt);
  if (ext.events.empty() || ext.events.back().kind != EventKind::sonic_cross)
    throw convergence_error(
        "smooth extension did not reach the lower sonic line from " +
        point_str(resume));

  ExtensionResult res;
  res.traj.samples = outbound.samples;
  res.traj.ivals = outbound.ivals;
  res.traj.samples.insert(res.traj.samples.end(), ext.samples.begin() + 1,
                          ext.samples.end());
  res.traj.ivals.insert(res.traj.ivals.end(), ext.ivals.begin(),
                        ext.ivals.end());
  const std::size_t shift = outbound.samples.size() - 1;
  for (Event e : ext.events) {
    e.sample += shift;
    res.traj.events.push_back(e);
  }

  attach_x(p, res.traj, XAnchor{0, std::exp(outbound.lnx[0])});
  attach_R(p, res.traj, RAnchor{0, std::exp(outbound.lnR[0])});

  // Project the localized endpoint onto C = -(1+V) along the local slope.
  const PhasePoint& e = res.traj.samples.back();
  const TrajInterval& liv = res.traj.ivals.back();
  const double gap = 1.0 + e.V + e.C;
  double Vs = e.V, Cs = e.C;
  const double den = 1.0 + liv.slope1;
  if (std::abs(den) > 1e-6) {
    const double h = -gap / den;
    if (liv.axis == Axis::V) {
      Vs += h;
      Cs += liv.slope1 * h;
    } else {
      Cs += h;
      Vs += liv.slope1 * h;
    }
  }
  res.sonic = {Vs, Cs};
  res.x_s = std::exp(res.traj.lnx.back());

  const CriticalPointSet cps = critical_points(p);
  if (!(res.sonic.C < cps.ringC))
    throw theory_violation(
        "maximal extension meets the sonic line at C_s = " +
        std::to_string(res.sonic.C) + ", not below the ring point C = " +
        std::to_string(cps.ringC));
  return res;
}

} // namespace guderley
