#include "guderley/fields.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "guderley/continuation.hpp"
#include "guderley/errors.hpp"
#include "guderley/interp.hpp"

namespace guderley {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

FlowState from_phase(const Params& p, double t, double r, double V, double C,
                     double R) {
  FlowState f;
  f.rho = R;
  f.u = -r * V / (p.lambda * t);
  f.c = -r * C / (p.lambda * t);
  f.p = f.rho * f.c * f.c / p.gamma;
  return f;
}

FlowState quiescent_state(const GlobalSolution& sol) {
  return FlowState{sol.rho0, 0.0, 0.0, 0.0};
}

FlowState terminal_state(const GlobalSolution& sol, double r) {
  const double pw = std::pow(r, 1.0 - sol.p.lambda) / sol.p.lambda;
  FlowState f;
  f.rho = sol.terminal.R0;
  f.u = -sol.terminal.v1 * pw;
  f.c = sol.terminal.c1 * pw;
  f.p = f.rho * f.c * f.c / sol.p.gamma;
  return f;
}

// Near-origin junction profiles V = v1 x, C = -c1 x, R = R0: the leading
// terms on both sides of x = 0, used below the sampled |x| range where the
// quadratic corrections are far under double precision.
FlowState junction_state(const GlobalSolution& sol, double t, double r,
                         double x) {
  return from_phase(sol.p, t, r, sol.terminal.v1 * x, -sol.terminal.c1 * x,
                    sol.terminal.R0);
}

FlowState branch_state(const GlobalSolution& sol, const Trajectory& traj,
                       double t, double r, double lnax) {
  const TrajState s = eval_at_lnx(sol.p, traj, lnax);
  return from_phase(sol.p, t, r, s.q.V, s.q.C, std::exp(s.lnR));
}

// Post-shock state of the reflected shock, from the matched data.
FlowState reflected_post(const GlobalSolution& sol, double t, double r) {
  return from_phase(sol.p, t, r, sol.match.P_H.V, sol.match.P_H.C,
                    std::exp(sol.downstream.lnR.front()));
}

FlowState reflected_pre(const GlobalSolution& sol, double t, double r) {
  return from_phase(sol.p, t, r, sol.match.pre_state.V, sol.match.pre_state.C,
                    sol.R_pre);
}

// Head of the collapse branch: the strong-shock state right behind the
// incoming shock.
FlowState incoming_post(const GlobalSolution& sol, double t, double r) {
  const PhasePoint& q = sol.collapse.samples.front();
  return from_phase(sol.p, t, r, q.V, q.C, std::exp(sol.collapse.lnR.front()));
}

// Downstream continuation past the last sample: V and C follow their exact
// tail exponents and ln R its exact asymptotic slope, matched continuously
// at the final sample.
FlowState downstream_tail(const GlobalSolution& sol, double t, double r,
                          double lnax) {
  const Params& p = sol.p;
  const double Vb = -2.0 * p.m * p.z / (p.m + 1);
  const double mu = -(p.m + 1) * Vb / (p.lambda * (1.0 + Vb));
  const double dl = lnax - sol.downstream.lnx.back();
  const PhasePoint& e = sol.downstream.samples.back();
  const double V = Vb + (e.V - Vb) * std::exp(-2.0 * sol.sigma * dl);
  const double C = e.C * std::exp(sol.sigma * dl);
  const double R = std::exp(sol.downstream.lnR.back() - mu * dl);
  return from_phase(p, t, r, V, C, R);
}

} // namespace

GlobalSolution assemble_solution(double gamma, int m, double lambda_tol) {
  const LambdaResult lr = find_lambda_std(gamma, m, lambda_tol);
  GlobalSolution s;
  s.p = params_from_z(gamma, m, lr.z);
  CollapseSolution cs = collapse_trajectory(s.p);
  const Trajectory arc = continue_through_origin(s.p, cs);
  ExtensionResult ext = maximal_extension(s.p, arc);
  const Trajectory vinf = pinfty_trajectory(s.p);
  const JumpLocus locus = jump_locus(s.p, ext.traj);
  s.match = find_PH(s.p, locus, vinf);
  s.R_pre = std::exp(eval_at_C(s.p, ext.traj, s.match.pre_state.C).lnR);
  s.downstream = downstream_trajectory(s.p, s.match, vinf, s.R_pre);
  s.collapse = std::move(cs.traj);
  s.outbound = std::move(ext.traj);
  s.terminal = cs.terminal;
  s.rho0 = 1.0;
  s.x_H = s.match.x_H;
  s.x_s = ext.x_s;
  s.sigma = vbar_and_sigma(s.p).sigma;
  return s;
}

FieldSample evaluate(const GlobalSolution& sol, double t, double r) {
  if (!std::isfinite(t) || !std::isfinite(r))
    throw domain_error("evaluate: t and r must be finite");
  if (!(r > 0.0)) throw domain_error("evaluate: requires r > 0, got r = " +
                                     std::to_string(r));

  FieldSample out;
  if (t == 0.0) {
    out.x = 0.0;
    out.branch = BranchId::terminal;
    out.state = terminal_state(sol, r);
    return out;
  }

  const double x = t / std::pow(r, sol.p.lambda);
  out.x = x;

  if (x < 0.0) {
    if (std::abs(x + 1.0) <= 8.0 * kEps) {
      out.branch = BranchId::collapse;
      out.state = incoming_post(sol, t, r);
      out.pre = quiescent_state(sol);
      return out;
    }
    if (x < -1.0) {
      out.branch = BranchId::quiescent;
      out.state = quiescent_state(sol);
      return out;
    }
    const double lnax = std::log(-x);
    if (lnax < sol.collapse.lnx.back()) {
      out.branch = BranchId::terminal;
      out.state = junction_state(sol, t, r, x);
      return out;
    }
    out.branch = BranchId::collapse;
    out.state = branch_state(sol, sol.collapse, t, r, lnax);
    return out;
  }

  if (std::abs(x - sol.x_H) <= 8.0 * kEps * sol.x_H) {
    out.branch = BranchId::downstream;
    out.state = reflected_post(sol, t, r);
    out.pre = reflected_pre(sol, t, r);
    return out;
  }
  const double lnax = std::log(x);
  if (x < sol.x_H) {
    if (lnax < sol.outbound.lnx.front()) {
      out.branch = BranchId::terminal;
      out.state = junction_state(sol, t, r, x);
      return out;
    }
    out.branch = BranchId::outbound;
    out.state = branch_state(sol, sol.outbound, t, r, lnax);
    return out;
  }
  out.branch = BranchId::downstream;
  if (lnax > sol.downstream.lnx.back()) {
    out.state = downstream_tail(sol, t, r, lnax);
    return out;
  }
  out.state = branch_state(sol, sol.downstream, t, r, lnax);
  return out;
}

double shock_radius(const GlobalSolution& sol, double t) {
  if (t == 0.0)
    throw domain_error("shock_radius: shock is at r = 0 at the collapse "
                       "instant");
  if (t > 0.0) return std::pow(t / sol.x_H, 1.0 / sol.p.lambda);
  return std::pow(-t, 1.0 / sol.p.lambda);
}

ShockResiduals rh_residual_physical(const GlobalSolution& sol, double t) {
  if (t == 0.0)
    throw domain_error("rh_residual_physical: no shock surface at t = 0");

  const double rs = shock_radius(sol, t);
  const double rdot = rs / (sol.p.lambda * t);
  FlowState pre, post;
  if (t < 0.0) {
    pre = quiescent_state(sol);
    post = incoming_post(sol, t, rs);
  } else {
    pre = reflected_pre(sol, t, rs);
    post = reflected_post(sol, t, rs);
  }

  const double g = sol.p.gamma;
  const double wm = pre.u - rdot;
  const double wp = post.u - rdot;
  const double mass_m = pre.rho * wm;
  const double mass_p = post.rho * wp;
  const double mom_m = pre.rho * wm * wm + pre.p;
  const double mom_p = post.rho * wp * wp + post.p;
  const double en_m = mass_m * (pre.c * pre.c / (g - 1.0) + 0.5 * wm * wm);
  const double en_p = mass_p * (post.c * post.c / (g - 1.0) + 0.5 * wp * wp);

  auto rel = [](double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0.0 ? std::abs(a - b) / s : 0.0;
  };
  ShockResiduals res;
  res.mass = rel(mass_m, mass_p);
  res.momentum = rel(mom_m, mom_p);
  res.energy = rel(en_m, en_p);
  res.lax_ok = std::abs(wm) > pre.c && std::abs(wp) < post.c;
  return res;
}

ResidualNorms euler_residual(const GlobalSolution& sol,
                             const ResidualGrid& grid) {
  if (grid.nt < 3 || grid.nr < 3)
    throw domain_error("euler_residual: grid needs nt, nr >= 3");
  if (!(grid.t0 < grid.t1) || !(grid.r0 < grid.r1) || !(grid.r0 > 0.0))
    throw domain_error("euler_residual: grid window must be ordered with "
                       "r0 > 0");
  if (!(grid.t0 * grid.t1 > 0.0))
    throw domain_error("euler_residual: time window must exclude the "
                       "collapse instant");
  if (!(grid.shock_margin > 0.0))
    throw domain_error("euler_residual: shock margin must be positive");

  const double ht = (grid.t1 - grid.t0) / (grid.nt - 1);
  const double hr = (grid.r1 - grid.r0) / (grid.nr - 1);
  const double g = sol.p.gamma;
  const int m = sol.p.m;

  auto near_shock = [&](double t, double r) {
    const double x = t / std::pow(r, sol.p.lambda);
    if (t < 0.0) return std::abs(x + 1.0) < grid.shock_margin;
    return std::abs(x - sol.x_H) < grid.shock_margin * sol.x_H;
  };
  struct Conserved {
    double U1, U2, U3, F1, F2, F3, S2;
  };
  // The geometric source of the momentum equation carries the advective
  // flux only; the pressure gradient has no curvature term in the radial
  // component.
  auto conserved = [&](double t, double r) {
    const FlowState f = evaluate(sol, t, r).state;
    Conserved c;
    c.U1 = f.rho;
    c.U2 = f.rho * f.u;
    c.U3 = f.p / (g - 1.0) + 0.5 * f.rho * f.u * f.u;
    c.F1 = c.U2;
    c.F2 = f.rho * f.u * f.u + f.p;
    c.F3 = (c.U3 + f.p) * f.u;
    c.S2 = f.rho * f.u * f.u;
    return c;
  };

  ResidualNorms out;
  for (int i = 1; i + 1 < grid.nt; ++i) {
    const double t = grid.t0 + ht * i;
    for (int j = 1; j + 1 < grid.nr; ++j) {
      const double r = grid.r0 + hr * j;
      if (near_shock(t, r) || near_shock(t - ht, r) || near_shock(t + ht, r) ||
          near_shock(t, r - hr) || near_shock(t, r + hr)) {
        ++out.masked;
        continue;
      }
      const Conserved cc = conserved(t, r);
      const Conserved ct0 = conserved(t - ht, r);
      const Conserved ct1 = conserved(t + ht, r);
      const Conserved cr0 = conserved(t, r - hr);
      const Conserved cr1 = conserved(t, r + hr);
      const double res1 = (ct1.U1 - ct0.U1) / (2.0 * ht) +
                          (cr1.F1 - cr0.F1) / (2.0 * hr) + m * cc.F1 / r;
      const double res2 = (ct1.U2 - ct0.U2) / (2.0 * ht) +
                          (cr1.F2 - cr0.F2) / (2.0 * hr) + m * cc.S2 / r;
      const double res3 = (ct1.U3 - ct0.U3) / (2.0 * ht) +
                          (cr1.F3 - cr0.F3) / (2.0 * hr) + m * cc.F3 / r;
      out.mass = std::max(out.mass, std::abs(res1));
      out.momentum = std::max(out.momentum, std::abs(res2));
      out.energy = std::max(out.energy, std::abs(res3));
      ++out.used;
    }
  }
  return out;
}

} // namespace guderley
