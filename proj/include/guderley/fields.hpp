#pragma once

#include <optional>

#include "guderley/collapse.hpp"
#include "guderley/params.hpp"
#include "guderley/reflected.hpp"
#include "guderley/trajectory.hpp"

namespace guderley {

// Physical state of the perfect gas at one (t, r) point; p = rho c^2 / gamma.
struct FlowState {
  double rho = 0.0;
  double u = 0.0;
  double c = 0.0;
  double p = 0.0;
};

enum class BranchId {
  quiescent,   // ahead of the incoming shock, x < -1
  collapse,    // -1 <= x < 0, shocked inflow before the collapse instant
  terminal,    // t = 0 power-law profiles and the near-origin patch
  outbound,    // 0 < x < x_H, between the collapse instant and the
               // reflected shock
  downstream,  // x >= x_H, behind the reflected shock
};

// One field evaluation.  `pre` is present only when (t, r) falls on a shock
// surface; `state` then carries the post-shock side.
struct FieldSample {
  double x = 0.0;
  BranchId branch = BranchId::quiescent;
  FlowState state;
  std::optional<FlowState> pre;
};

// The assembled self-similar solution.  The three trajectory branches tile
// the similarity line: the collapse branch covers x in [-1, 0) with C > 0,
// the outbound branch covers (0, x_s] with C < 0 (physical up to the
// reflected shock at x_H < x_s), and the downstream branch covers
// [x_H, infinity) with C < 0, continued past its last sample by the exact
// tail exponents.  Ahead of the incoming shock (x < -1) the gas is cold and
// quiescent at density rho0.
struct GlobalSolution {
  Params p;
  Trajectory collapse;
  Trajectory outbound;
  Trajectory downstream;
  MatchResult match;
  TerminalData terminal;
  double rho0 = 1.0;
  double x_H = 0.0;
  double x_s = 0.0;
  double sigma = 0.0;  // downstream decay exponent of C
  double R_pre = 0.0;  // density just ahead of the reflected shock
};

// Runs the whole pipeline at a converged exponent: shooting, collapse,
// continuation through the origin, maximal extension, far-point trajectory,
// shock matching, downstream branch.  Throws the underlying stage's error
// when any leg fails.
GlobalSolution assemble_solution(double gamma, int m, double lambda_tol = 1e-13);

// Fields at one point: x = t / r^lambda selects the branch, the stored
// trajectory is interpolated there, and u = -r V / (lambda t),
// c = -r C / (lambda t), rho = R, p = rho c^2 / gamma.  At t = 0 the
// terminal profiles rho = R0, u = -v1 r^(1-lambda)/lambda,
// c = c1 r^(1-lambda)/lambda apply.  Points within a few ulps of a shock
// surface return both states.  Throws domain_error unless r > 0 and both
// arguments are finite.
FieldSample evaluate(const GlobalSolution& sol, double t, double r);

// Shock surface radius: the incoming shock sits at x = -1 for t < 0 and the
// reflected shock at x = x_H for t > 0.  Throws domain_error at t = 0, when
// the shock is at the origin.
double shock_radius(const GlobalSolution& sol, double t);

// Relative jumps of the conserved fluxes in the frame of the shock at time
// t, plus the Lax admissibility flags of the two states.
struct ShockResiduals {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;
  bool lax_ok = false;
};

ShockResiduals rh_residual_physical(const GlobalSolution& sol, double t);

// Uniform (t, r) grid for the conservation-law residual.  The time window
// must have one sign so the collapse instant is excluded; stencil points
// whose similarity coordinate lies within shock_margin (relative) of a
// shock surface are masked out.
struct ResidualGrid {
  double t0 = 0.0;
  double t1 = 0.0;
  double r0 = 0.0;
  double r1 = 0.0;
  int nt = 0;
  int nr = 0;
  double shock_margin = 0.02;
};

struct ResidualNorms {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;
  int used = 0;    // interior stencil centers evaluated
  int masked = 0;  // interior stencil centers skipped near a shock
};

// Max-norm residuals of the three radial conservation laws over the grid,
// with time and space derivatives by centered differences.  Smooth-region
// residuals shrink at second order when both spacings are halved.
ResidualNorms euler_residual(const GlobalSolution& sol, const ResidualGrid& grid);

} // namespace guderley
