#include "guderley/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "guderley/detail/origin_tail.hpp"
#include "guderley/detail/quad.hpp"
#include "guderley/detail/rootfind.hpp"
#include "guderley/errors.hpp"
#include "guderley/ode.hpp"

namespace guderley {

namespace {

constexpr double kBallRadius = 1e-6;
constexpr double kCStopCap = 1e-3;

std::string point_str(const PhasePoint& q) {
  return "(V, C) = (" + std::to_string(q.V) + ", " + std::to_string(q.C) + ")";
}

PhasePoint triple_of(const CriticalPointSet& cps, TriplePoint t) {
  return t == TriplePoint::P6 ? cps.P6 : cps.P8;
}

// Local structure of the separatrix through a sonic triple point:
// C(V) = C* + k h + k2 h^2 / 2 with h = V - V*.  k is the negative root of
// GC k^2 + (GV - FC) k - FV = 0 (the monotone-decreasing passage direction),
// mu = GV + k GC its eigenvalue, and k2 follows from matching the second
// order of F = C'(V) G along the curve.
struct TripleLocal {
  double k = 0.0;
  double k2 = 0.0;
  double mu = 0.0;
  double mu_other = 0.0;
};

TripleLocal triple_local(const Params& p, const PhasePoint& tri) {
  const DFGGrad g = eval_DFG_grad(p, tri);
  const double a = g.GC;
  const double b = g.GV - g.FC;
  const double c = -g.FV;
  const double disc = b * b - 4.0 * a * c;
  if (!(disc > 0.0) || a == 0.0)
    throw convergence_error(
        "triple point linearization is defective near " + point_str(tri));
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  const double r1 = q == 0.0 ? 0.0 : q / a;
  const double r2 = q == 0.0 ? -b / a : c / q;
  const double neg = std::min(r1, r2), pos = std::max(r1, r2);
  if (!(neg < 0.0) || !(pos >= 0.0))
    throw convergence_error(
        "no decreasing separatrix direction at the triple point " +
        point_str(tri));

  TripleLocal tl;
  tl.k = neg;
  tl.mu = g.GV + tl.k * g.GC;
  tl.mu_other = g.GV + pos * g.GC;

  // Second derivatives of F and G (D is already quadratic).
  const double h1 = 1.0 + tri.V;
  const double mz = p.m * p.z;
  const double FVV = tri.C * tri.C * tri.C * 2.0 * mz / (h1 * h1 * h1) -
                     2.0 * p.a1 * tri.C;
  const double FVC = -3.0 * tri.C * tri.C * mz / (h1 * h1) -
                     (2.0 * p.a1 * h1 - p.a2);
  const double FCC = 6.0 * tri.C * f1(p, tri.V);
  const double GVV = -(6.0 * tri.V + 2.0 * (1.0 + p.lambda));
  const double GVC = 2.0 * tri.C * (p.m + 1);
  const double GCC = 2.0 * g1(p, tri.V);

  const double FQ = FVV + tl.k * (2.0 * FVC + tl.k * FCC);
  const double GQ = GVV + tl.k * (2.0 * GVC + tl.k * GCC);
  const double den = 2.0 * tl.mu - g.FC + tl.k * g.GC;
  const double den_scale =
      std::abs(tl.mu) + std::abs(g.FC) + std::abs(tl.k * g.GC) + 1.0;
  tl.k2 = std::abs(den) > 1e-10 * den_scale ? (FQ - tl.k * GQ) / den : 0.0;
  return tl;
}

double slope_dCdV(const TrajInterval& iv, bool right) {
  const double s = right ? iv.slope1 : iv.slope0;
  return iv.axis == Axis::V ? s : 1.0 / s;
}

TrajInterval seam_interval(double k, double s0, double s1) {
  TrajInterval iv;
  if (std::abs(k) <= 1.1) {
    iv.axis = Axis::V;
    iv.dir = +1;
    iv.slope0 = s0;
    iv.slope1 = s1;
  } else {
    iv.axis = Axis::C;
    iv.dir = -1;
    iv.slope0 = 1.0 / s0;
    iv.slope1 = 1.0 / s1;
  }
  return iv;
}

} // namespace

double shoot_miss(double gamma, int m, double z, TriplePoint target) {
  const Params p = params_from_z(gamma, m, z);
  const CriticalPointSet cps = critical_points(p);
  const PhasePoint tri = triple_of(cps, target);

  std::vector<EventSpec> events(2);
  events[0].kind = EventKind::sonic_cross;
  events[0].terminal = true;
  events[1].kind = EventKind::G_zero_cross;
  events[1].terminal = true;
  std::vector<StopSpec> stops(1);
  stops[0].what = StopSpec::What::V_reaches;
  stops[0].value = tri.V;

  const Trajectory traj =
      integrate_phase(p, p1_state(gamma), std::nullopt, events, stops);
  if (traj.events.empty())
    throw convergence_error(
        "shot from the strong-shock state ended without reaching V = V_*, "
        "folding, or crossing the sonic line at z = " + std::to_string(z));
  const Event& e = traj.events.back();
  return e.kind == EventKind::stop ? e.at.C - tri.C : e.at.V - tri.V;
}

LambdaResult find_lambda_std(double gamma, int m, double tol) {
  if (!(tol > 0.0))
    throw domain_error("tol must be positive, got " + std::to_string(tol));
  const SpecialZ sz = special_z(gamma, m);

  std::vector<TriplePoint> cands;
  if (gamma < 2.0 && !sz.Zring_P6.empty) cands.push_back(TriplePoint::P6);
  if (!sz.Zring_P8.empty) cands.push_back(TriplePoint::P8);
  if (cands.empty())
    throw domain_error("no admissible triple-point window at gamma = " +
                       std::to_string(gamma));

  std::string profile;
  for (TriplePoint cand : cands) {
    const ZInterval win =
        cand == TriplePoint::P6 ? sz.Zring_P6 : sz.Zring_P8;
    constexpr int n = 20;
    double zs[n], ms[n];
    const double lo = win.lo + 1e-4 * (win.hi - win.lo);
    profile += cand == TriplePoint::P6 ? " P6:" : " P8:";
    for (int i = 0; i < n; ++i) {
      zs[i] = lo + (win.hi - lo) * i / (n - 1);
      try {
        ms[i] = shoot_miss(gamma, m, zs[i], cand);
      } catch (const convergence_error&) {
        ms[i] = std::numeric_limits<double>::quiet_NaN();
      }
      profile += " (" + std::to_string(zs[i]) + ", " + std::to_string(ms[i]) +
                 ")";
    }
    int ib = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (std::isfinite(ms[i]) && std::isfinite(ms[i + 1]) &&
          (ms[i] > 0.0) != (ms[i + 1] > 0.0)) {
        ib = i;
        break;
      }
    if (ib < 0) continue;

    auto f = [&](double z) { return shoot_miss(gamma, m, z, cand); };
    LambdaResult r;
    r.z = detail::brent(f, zs[ib], zs[ib + 1], ms[ib], ms[ib + 1], tol);
    r.lambda = 1.0 + m * gamma * r.z;
    r.triple = cand;
    r.miss_residual = shoot_miss(gamma, m, r.z, cand);
    return r;
  }
  throw convergence_error(
      "shooting residual has no sign change in the admissible z windows;"
      " scan:" + profile);
}

CollapseSolution collapse_trajectory(const Params& p) {
  const CriticalPointSet cps = critical_points(p);
  const SpecialZ sz = special_z(p.gamma, p.m);

  std::vector<TriplePoint> cands;
  if (p.gamma < 2.0 && sz.Zring_P6.contains(p.z))
    cands.push_back(TriplePoint::P6);
  if (sz.Zring_P8.contains(p.z)) cands.push_back(TriplePoint::P8);
  if (cands.empty())
    throw domain_error("z = " + std::to_string(p.z) +
                       " lies in no admissible triple-point window at gamma "
                       "= " + std::to_string(p.gamma));

  std::vector<EventSpec> events(2);
  events[0].kind = EventKind::sonic_cross;
  events[0].terminal = true;
  events[1].kind = EventKind::G_zero_cross;
  events[1].terminal = true;
  std::vector<StopSpec> stops;
  for (TriplePoint c : cands) {
    StopSpec s;
    s.what = StopSpec::What::ball_around;
    s.center = triple_of(cps, c);
    s.radius = kBallRadius;
    stops.push_back(s);
  }

  Trajectory inbound =
      integrate_phase(p, p1_state(p.gamma), std::nullopt, events, stops);
  if (inbound.events.empty() || inbound.events.back().kind != EventKind::stop)
    throw convergence_error(
        "collapse trajectory folded or went sonic away from the triple point "
        "near " +
        point_str(inbound.samples.back()) +
        "; the similarity exponent is not converged");

  const TriplePoint which = cands[std::size_t(inbound.events.back().stop_index)];
  const PhasePoint tri = triple_of(cps, which);
  const TripleLocal tl = triple_local(p, tri);

  const double entry_slope = slope_dCdV(inbound.ivals.back(), true);
  if (!(std::abs(entry_slope - tl.k) <= 0.05 * (1.0 + std::abs(tl.k))))
    throw convergence_error(
        "inbound slope " + std::to_string(entry_slope) +
        " does not match the separatrix direction " + std::to_string(tl.k) +
        " at " + point_str(tri));

  // Step off along the separatrix; widen the offset when the transverse
  // eigenvalue dominates and amplifies the seeding error.
  const double ratio = std::abs(tl.mu_other / tl.mu);
  const double h_off = kBallRadius * std::clamp(ratio, 1.0, 10.0);
  const double hv = h_off / std::sqrt(1.0 + tl.k * tl.k);
  const PhasePoint seed{tri.V + hv,
                        tri.C + tl.k * hv + 0.5 * tl.k2 * hv * hv};
  const double seed_slope = tl.k + tl.k2 * hv;

  const double c_stop = std::min(kCStopCap, 0.1 * tri.C);
  std::vector<StopSpec> ostops(1);
  ostops[0].what = StopSpec::What::C_reaches;
  ostops[0].value = c_stop;
  Trajectory outbound = integrate_phase(p, seed, seed_slope, {}, ostops);
  if (outbound.events.empty())
    throw convergence_error(
        "outbound leg from the triple point did not reach |C| = " +
        std::to_string(c_stop));

  CollapseSolution sol;
  sol.triple = which;
  sol.triple_at = tri;

  Trajectory& traj = sol.traj;
  traj.samples = inbound.samples;
  traj.ivals = inbound.ivals;
  traj.samples.push_back(tri);
  traj.ivals.push_back(seam_interval(tl.k, entry_slope, tl.k));
  traj.ivals.push_back(seam_interval(tl.k, tl.k, seed_slope));
  traj.samples.insert(traj.samples.end(), outbound.samples.begin(),
                      outbound.samples.end());
  traj.ivals.insert(traj.ivals.end(), outbound.ivals.begin(),
                    outbound.ivals.end());

  attach_x(p, traj, XAnchor{0, -1.0});
  attach_R(p, traj, RAnchor{0, (p.gamma + 1.0) / (p.gamma - 1.0)});

  // Match the origin series V(C) to the far end of the outbound leg.  The
  // match sample sits near half the handoff radius: large enough |C| that a
  // V-mismatch translates into v1 without amplification.
  const double c1_est = slope_dCdV(traj.ivals.back(), true);
  const double v10 = match_v1(p, tri, c1_est);
  const double hand = handoff_radius(series_coeffs(p, v10));

  const std::size_t obase = inbound.samples.size() + 1;
  auto pick = [&](double target) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = obase; j < traj.samples.size(); ++j) {
      const double c = traj.samples[j].C;
      if (c > 0.75 * hand) continue;
      const double d = std::abs(c - target);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    if (!std::isfinite(bd))
      throw convergence_error(
          "no trajectory sample inside the origin-series handoff radius " +
          std::to_string(hand));
    return best;
  };
  const std::size_t im = pick(0.5 * hand);
  const double Cm = traj.samples[im].C, Vm = traj.samples[im].V;

  auto mismatch = [&](double v1) {
    return series_eval(series_coeffs(p, v1), Cm).V - Vm;
  };
  double va = v10, fa = mismatch(va);
  double vb = v10 * (1.0 + 1e-4), fb = mismatch(vb);
  for (int it = 0; it < 60 && fa != fb; ++it) {
    double vn = vb - fb * (vb - va) / (fb - fa);
    if (!(vn < 0.0)) vn = 0.5 * vb;
    va = vb;
    fa = fb;
    vb = vn;
    fb = mismatch(vb);
    if (std::abs(vb - va) <= 1e-13 * std::max(std::abs(vb), 0.1)) break;
  }
  if (!(std::abs(fb) <= 1e-8 * std::max(1.0, std::abs(Vm))))
    throw convergence_error(
        "origin series failed to match the trajectory at C = " +
        std::to_string(Cm) + "; residual " + std::to_string(fb));
  match_v1(p, tri, 1.0 / vb);

  sol.v1_series = vb;
  sol.series = series_coeffs(p, vb);
  sol.match_sample = im;

  const std::size_t ival = pick(0.25 * hand);
  if (ival != im) {
    const double dv =
        series_eval(sol.series, traj.samples[ival].C).V - traj.samples[ival].V;
    if (!(std::abs(dv) <= 1e-6))
      throw convergence_error(
          "origin series and trajectory disagree by " + std::to_string(dv) +
          " at C = " + std::to_string(traj.samples[ival].C));
  }

  // Terminal constants: continue ln|x| and ln R from the match sample to the
  // origin along the series, integrating the logarithmic derivatives of
  // |V/x| and R (1+V), both finite at the origin.
  auto lnq = [&](double C) { return detail::dlnVx_dC(p, sol.series, C); };
  auto lnr = [&](double C) { return detail::dlnR1V_dC(p, sol.series, C); };
  const double Iphi = -detail::adaptive_gl5(lnq, 0.0, Cm);
  const double IR = -detail::adaptive_gl5(lnr, 0.0, Cm);

  sol.terminal.v1 = std::exp(std::log(-Vm) - traj.lnx[im] + Iphi);
  sol.terminal.c1 = -sol.terminal.v1 / sol.v1_series;
  sol.terminal.R0 = std::exp(traj.lnR[im] + IR + std::log1p(Vm));
  return sol;
}

} // namespace guderley
