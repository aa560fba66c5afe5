#pragma once

#include <optional>
#include <vector>

#include "guderley/params.hpp"
#include "guderley/phase_plane.hpp"
#include "guderley/trajectory.hpp"

namespace guderley {

// Closed-form data of the far point (Vbar_inf, -infinity): the limit
// velocity coordinate behind the reflected shock and the downstream tail
// exponent sigma = (1 + m z / (1 + Vbar_inf)) / lambda.
struct SigmaInfo {
  double Vbar_inf = 0.0;
  double sigma = 0.0;
};

SigmaInfo vbar_and_sigma(const Params& p);

// The unique trajectory from the far point, integrated from C_start
// (default -1000 max(1, |C_ring|)) up to just below the ring point's C.
// The start value carries the leading 1/C^2 correction of the fixed-point
// expansion around Vbar_inf.  V is strictly decreasing in C, and the curve
// is confined between the G = 0 and F = 0 branches; leaving that strip
// throws theory_violation.
Trajectory pinfty_trajectory(const Params& p,
                             std::optional<double> C_start = std::nullopt);

// Image of the maximal extension under the shock jump, parametrized by the
// extension's own samples (pre[i] maps to post[i]).  Samples pushed a hair
// below the sonic line by roundoff are skipped.
struct JumpLocus {
  Trajectory ext;  // the parametrizing extension branch
  std::vector<PhasePoint> pre;
  std::vector<PhasePoint> post;
};

JumpLocus jump_locus(const Params& p, const Trajectory& ext);

// Where the reflected shock sits: the jump locus meets the trajectory from
// the far point at P_H = jump(pre_state), with the pre-state on the maximal
// extension at x = x_H.
struct MatchResult {
  PhasePoint P_H;
  double C_H = 0.0;
  PhasePoint pre_state;
  double x_H = 0.0;
  int intersection_count = 0;
};

// Scans the locus against the far-point trajectory for sign changes of
// V_post - V_inf(C_post), refines the first crossing along the locus, and
// pulls the pre-state and x_H back through the extension's annotation.
// Throws theory_violation when no crossing exists, when the crossing is not
// entropy-admissible or lies at or above the ring point's C, or when
// gamma <= gamma_star and the crossing is not unique.
MatchResult find_PH(const Params& p, const JumpLocus& locus,
                    const Trajectory& vinf, double gamma_star = 5.0 / 3.0);

// Downstream branch: the far-point trajectory restricted to C <= C_H,
// reversed so x increases along it, x-anchored at x_H and R-anchored through
// the density jump R+ = R_pre (1 + V-) / (1 + V+).
Trajectory downstream_trajectory(const Params& p, const MatchResult& match,
                                 const Trajectory& vinf, double R_pre);

} // namespace guderley
