#include "guderley/jump.hpp"

#include <cmath>
#include <string>

#include "guderley/errors.hpp"

namespace guderley {

namespace {

double kappa_star(double gamma) {
  return std::sqrt((gamma - 1.0) / (2.0 * gamma));
}

// I and its inverse share one formula: y -> sqrt((2g - (g-1) y^2)/(g-1 + 2 y^2))
double ray_involution(double gamma, double y) {
  const double y2 = y * y;
  return std::sqrt((2.0 * gamma - (gamma - 1.0) * y2) /
                   (gamma - 1.0 + 2.0 * y2));
}

} // namespace

RegionTag classify_region(const Params& p, const PhasePoint& q) {
  const double h = 1.0 + q.V;
  if (q.C <= 0.0 && h >= -q.C && h > 0.0) return RegionTag::S_U;
  if (q.C < 0.0 && h <= -q.C && h >= -kappa_star(p.gamma) * q.C)
    return RegionTag::S_L;
  return RegionTag::other;
}

PhasePoint jump(const Params& p, const PhasePoint& pre) {
  const double g = p.gamma;
  const double h = 1.0 + pre.V;
  if (!(pre.C <= 0.0))
    throw domain_error("jump: pre-state needs C <= 0, got C = " +
                       std::to_string(pre.C));
  const double slack = 1e-12 * (h + std::abs(pre.C) + 1.0);
  if (!(h > 0.0) || h < -pre.C - slack)
    throw domain_error("jump: pre-state must satisfy 1+V >= -C >= 0 (S_U)");
  const double J1 =
      (g - 1.0) / (g + 1.0) * h + 2.0 * pre.C * pre.C / ((g + 1.0) * h) - 1.0;
  const double h2 = 1.0 + J1;
  const double rad = pre.C * pre.C + 0.5 * (g - 1.0) * (h * h - h2 * h2);
  const double J2 = -std::sqrt(std::max(rad, 0.0));
  return {J1, J2};
}

PhasePoint jump_inverse(const Params& p, const PhasePoint& post) {
  const double g = p.gamma;
  const double h_post = 1.0 + post.V;
  if (!(post.C <= 0.0) || !(h_post > 0.0))
    throw domain_error("jump_inverse: post-state needs C <= 0 and V > -1");
  const double kappa_post = -post.C / h_post;
  const double kmax = 1.0 / kappa_star(g);
  if (kappa_post < 1.0 - 1e-12 || kappa_post > kmax + 1e-12)
    throw domain_error(
        "jump_inverse: post-state lies outside the subsonic band S_L");

  const double kappa_pre = ray_involution(g, std::min(kappa_post, kmax));
  double h = h_post * (g + 1.0) / (g - 1.0 + 2.0 * kappa_pre * kappa_pre);
  double V = h - 1.0, C = -kappa_pre * h;

  // Newton polish of the forward residual in (V, C)
  for (int it = 0; it < 3; ++it) {
    const PhasePoint fwd = jump(p, {V, C});
    const double r1 = fwd.V - post.V, r2 = fwd.C - post.C;
    if (std::abs(r1) + std::abs(r2) < 1e-15) break;
    const double eps = 1e-7;
    const PhasePoint fV = jump(p, {V + eps, C});
    const PhasePoint fC = jump(p, {V, C - eps});
    const double a = (fV.V - fwd.V) / eps, b = (fC.V - fwd.V) / (-eps);
    const double c = (fV.C - fwd.C) / eps, d = (fC.C - fwd.C) / (-eps);
    const double det = a * d - b * c;
    if (det == 0.0) break;
    V -= (d * r1 - b * r2) / det;
    C -= (-c * r1 + a * r2) / det;
  }
  return {V, C};
}

double line_image_kappa(double gamma, double kappa) {
  if (!(kappa >= 0.0) || !(kappa < 1.0))
    throw domain_error("line_image_kappa: kappa must lie in [0, 1), got " +
                       std::to_string(kappa));
  return ray_involution(gamma, kappa);
}

bool entropy_check(const Params&, const PhasePoint& pre) {
  return pre.C * pre.C < (1.0 + pre.V) * (1.0 + pre.V);
}

} // namespace guderley
