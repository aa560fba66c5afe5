#pragma once

#include <cstddef>

#include "guderley/params.hpp"
#include "guderley/phase_plane.hpp"
#include "guderley/series.hpp"
#include "guderley/trajectory.hpp"

namespace guderley {

enum class TriplePoint { P6, P8 };

struct LambdaResult {
  double lambda = 0.0;
  double z = 0.0;
  TriplePoint triple = TriplePoint::P6;
  double miss_residual = 0.0;
};

// Signed shooting residual: integrate dC/dV from the strong-shock state P1
// toward the target sonic triple point, stopping at the first of {V = V_*,
// a fold (G = 0), a sonic crossing}.  Positive when the trajectory reaches
// V_* still supersonic (C above C_*); negative when it folds away or goes
// sonic early (measured in V).  Continuous in z near the root: the fold
// point slides into the triple point as z approaches z_std from above.
double shoot_miss(double gamma, int m, double z, TriplePoint target);

// Similarity exponent lambda_std = 1 + m gamma z_std of the standard
// collapsing solution.  Scans the admissible z window of each candidate
// triple point (P6 for gamma < 2, P8 for gamma > gamma_star, both in the
// overlap with P6 preferred) for a sign change of shoot_miss on a 20-point
// grid, then polishes the bracket with Brent to |dz| <= tol.
LambdaResult find_lambda_std(double gamma, int m, double tol = 1e-13);

// Amplitude constants of the t -> 0 limit profiles away from the center:
// rho -> R0, u -> -v1 r^(1-lambda)/lambda, c -> c1 r^(1-lambda)/lambda.
// All three are positive.
struct TerminalData {
  double R0 = 0.0;
  double v1 = 0.0;
  double c1 = 0.0;
};

struct CollapseSolution {
  Trajectory traj;              // P1 -> near-origin, x and R attached
  TriplePoint triple = TriplePoint::P6;
  PhasePoint triple_at;         // the sonic triple point passed through
  OriginSeries series;          // outbound branch V(C) matched to the trajectory
  double v1_series = 0.0;       // slope parameter of the matched series, < 0
  std::size_t match_sample = 0; // sample index the series was matched at
  TerminalData terminal;
};

// Collapse trajectory at a converged exponent (p built from the z of
// find_lambda_std): P1 through the triple point along its separatrix
// eigen-direction, down to |C| ~ 1e-3, with x anchored to -1 at P1 and R to
// the strong-shock density on a unit-density quiescent gas, plus the matched
// origin series and the terminal amplitude constants.
CollapseSolution collapse_trajectory(const Params& p);

} // namespace guderley
