#pragma once

#include <cstddef>

#include "guderley/params.hpp"
#include "guderley/trajectory.hpp"

namespace guderley {

// One interpolated state on a trajectory.  lnx and lnR are NaN when the
// branch carries no such annotation.
struct TrajState {
  PhasePoint q;
  double lnx = 0.0;
  double lnR = 0.0;
  std::size_t ival = 0;  // interval the query landed in
};

// Cubic Hermite evaluation on the stored intervals, using the recorded
// endpoint slopes for the phase variable and the annotation integrands for
// ln|x| and ln R.  The query coordinate must be strictly monotone across the
// trajectory (C for eval_at_C, ln|x| for eval_at_lnx, which also requires an
// x-annotated branch); out-of-range queries throw domain_error.
TrajState eval_at_C(const Params& p, const Trajectory& t, double C);
TrajState eval_at_lnx(const Params& p, const Trajectory& t, double lnx);

} // namespace guderley
