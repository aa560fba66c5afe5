#pragma once

#include "guderley/collapse.hpp"
#include "guderley/params.hpp"
#include "guderley/phase_plane.hpp"
#include "guderley/trajectory.hpp"

namespace guderley {

// The smooth solution on the x > 0 side, integrated until it meets the lower
// sonic line C = -(1+V), beyond which the profile folds in x and no smooth
// continuation exists.
struct ExtensionResult {
  Trajectory traj;   // from the origin handoff to the sonic endpoint
  PhasePoint sonic;  // (V_s, C_s) with C_s = -(1+V_s)
  double x_s = 0.0;  // x at the sonic endpoint, the largest x of the branch
};

// Restarts the solution on the x > 0 side of the origin.  The origin series
// carries the phase curve across (0, 0) into the fourth quadrant; numeric
// integration resumes at a mirrored handoff point, with ln|x| and ln R
// anchored through the finite origin limits V/x -> v1 and R (1+V) -> R0 of
// the collapse solution.  Requires a collapse solution with converged series
// and terminal constants.
Trajectory continue_through_origin(const Params& p, const CollapseSolution& cs);

// Extends the outbound branch to the lower sonic line.  The fold of the
// trajectory at G = 0 is crossed by the axis switch (C decreases
// monotonically throughout and parametrizes the arc past the fold); the
// endpoint is localized by the sonic-line event and projected onto
// C = -(1+V) along the local slope.  Throws theory_violation when C_s does
// not lie below the ring point's C coordinate, and convergence_error when
// the sonic line is not reached within the step budget.
ExtensionResult maximal_extension(const Params& p, const Trajectory& outbound);

} // namespace guderley
