#pragma once

#include "guderley/params.hpp"
#include "guderley/phase_plane.hpp"

namespace guderley {

// Supersonic lower half strip S_U = {C <= 0, 1+V >= -C} and its subsonic
// image band S_L = {C < 0, -kappa_star C <= 1+V <= -C} with
// kappa_star = sqrt((gamma-1)/(2 gamma)).  Sonic-line points belong to both
// and are fixed points of the jump.
enum class RegionTag { S_U, S_L, other };

RegionTag classify_region(const Params& p, const PhasePoint& q);

// Shock jump across C = -kappa (1+V) rays:
//   J1 = (g-1)/(g+1) (1+V) + 2 C^2 / ((g+1)(1+V)) - 1
//   J2 = -sqrt(C^2 + (g-1)/2 ((1+V)^2 - (1+J1)^2))
// Throws domain_error when pre is outside S_U.
PhasePoint jump(const Params& p, const PhasePoint& pre);

// Exact inversion along the kappa-ray structure, then a Newton polish on the
// forward map.  Throws domain_error when post is outside S_L.
PhasePoint jump_inverse(const Params& p, const PhasePoint& post);

// Slope image of the ray C = -kappa (1+V): the jump of any point on it lands
// on C = -I(kappa) (1+V).  Domain kappa in [0,1).
double line_image_kappa(double gamma, double kappa);

// True when the jump from pre strictly increases entropy (pre strictly
// supersonic relative to the ray frame).
bool entropy_check(const Params& p, const PhasePoint& pre);

} // namespace guderley
