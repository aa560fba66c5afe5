#include "guderley/reflected.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "guderley/detail/rootfind.hpp"
#include "guderley/errors.hpp"
#include "guderley/interp.hpp"
#include "guderley/jump.hpp"
#include "guderley/ode.hpp"

namespace guderley {

SigmaInfo vbar_and_sigma(const Params& p) {
  SigmaInfo s;
  s.Vbar_inf = -2.0 * p.m * p.z / (p.m + 1);
  s.sigma = (1.0 + p.m * p.z / (1.0 + s.Vbar_inf)) / p.lambda;
  return s;
}

Trajectory pinfty_trajectory(const Params& p, std::optional<double> C_start) {
  const CriticalPointSet cps = critical_points(p);
  const double scale = std::max(1.0, std::abs(cps.ringC));
  const double c0 = C_start.value_or(-1000.0 * scale);
  if (!(c0 < -10.0 * scale))
    throw domain_error("pinfty_trajectory: start C must sit well below the ring point");

  const double Vb = vbar_and_sigma(p).Vbar_inf;
  const double alpha = 1.0 + p.m * p.z / (1.0 + Vb);
  const double beta = (p.m + 1) / alpha;
  const double g2 = Vb * (1.0 + Vb) * (p.lambda + Vb);
  const PhasePoint start{Vb + g2 / (alpha * (2.0 + beta) * c0 * c0), c0};

  IntegrateOptions opt;
  opt.axis0 = Axis::C;
  opt.dir0 = +1;
  opt.max_dstep = std::max(1.0, std::abs(c0) / 200.0);

  const double c_end = cps.ringC - 1e-7 * scale;
  std::vector<StopSpec> stops(1);
  stops[0].what = StopSpec::What::C_reaches;
  stops[0].value = c_end;
  Trajectory t = integrate_phase(p, start, std::nullopt, {}, stops, opt);
  if (t.events.empty() || t.events.back().kind != EventKind::stop)
    throw convergence_error("pinfty_trajectory: stopped before the ring point");

  for (const PhasePoint& q : t.samples) {
    const double tol = 1e-9 * (1.0 + std::abs(q.V));
    const bool below = q.V <= branch_VG(p, q.C) - tol;
    const bool above =
        q.C <= cps.P9.C && q.V >= branch_VF_plus(p, q.C) + tol;
    if (below || above)
      throw theory_violation("pinfty_trajectory: left the admissible strip");
  }
  return t;
}

JumpLocus jump_locus(const Params& p, const Trajectory& ext) {
  if (ext.size() < 2)
    throw domain_error("jump_locus: extension has no intervals");
  JumpLocus loc;
  loc.ext = ext;
  loc.pre.reserve(ext.size());
  loc.post.reserve(ext.size());
  for (const PhasePoint& q : ext.samples) {
    if (!(q.C < 0.0) || 1.0 + q.V + q.C < 0.0) continue;
    loc.pre.push_back(q);
    loc.post.push_back(jump(p, q));
  }
  return loc;
}

namespace {

double vinf_gap(const Params& p, const Trajectory& vinf, const PhasePoint& post) {
  return eval_at_C(p, vinf, post.C).q.V - post.V;
}

} // namespace

MatchResult find_PH(const Params& p, const JumpLocus& locus,
                    const Trajectory& vinf, double gamma_star) {
  if (locus.pre.size() < 2)
    throw domain_error("find_PH: jump locus is empty");
  if (vinf.size() < 2)
    throw domain_error("find_PH: far-point trajectory has no intervals");
  if (!locus.ext.has_x())
    throw domain_error("find_PH: extension branch has no x annotation");

  // The far-point trajectory covers C in [C_first, C_last]; locus points
  // jumping above its top end cannot intersect it.
  const double c_top = vinf.samples.back().C;

  std::vector<double> gap(locus.post.size(),
                          std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < locus.post.size(); ++i) {
    if (locus.post[i].C <= c_top) gap[i] = vinf_gap(p, vinf, locus.post[i]);
  }

  int count = 0;
  std::size_t first_lo = 0;
  for (std::size_t i = 0; i + 1 < gap.size(); ++i) {
    if (std::isnan(gap[i]) || std::isnan(gap[i + 1])) continue;
    if (gap[i] == 0.0 || (gap[i] > 0.0) != (gap[i + 1] > 0.0)) {
      if (count == 0) first_lo = i;
      ++count;
    }
  }
  if (count == 0)
    throw theory_violation("find_PH: jump locus misses the far-point trajectory");
  if (count > 1 && p.gamma <= gamma_star)
    throw theory_violation("find_PH: multiple crossings below the uniqueness index");

  auto gap_at_pre = [&](double Cpre) {
    const PhasePoint pre = eval_at_C(p, locus.ext, Cpre).q;
    return vinf_gap(p, vinf, jump(p, pre));
  };
  const double ca = locus.pre[first_lo].C;
  const double cb = locus.pre[first_lo + 1].C;
  const double c_root = detail::brent(gap_at_pre, ca, cb, gap[first_lo],
                                      gap[first_lo + 1], 1e-15);

  MatchResult mr;
  const TrajState pre = eval_at_C(p, locus.ext, c_root);
  mr.pre_state = pre.q;
  mr.P_H = jump(p, pre.q);
  mr.C_H = mr.P_H.C;
  mr.x_H = std::exp(pre.lnx);
  mr.intersection_count = count;

  const CriticalPointSet cps = critical_points(p);
  if (!(mr.C_H < cps.ringC))
    throw theory_violation("find_PH: crossing does not lie below the ring point");
  if (!entropy_check(p, mr.pre_state))
    throw theory_violation("find_PH: crossing is not entropy-admissible");
  return mr;
}

Trajectory downstream_trajectory(const Params& p, const MatchResult& match,
                                 const Trajectory& vinf, double R_pre) {
  if (vinf.size() < 2)
    throw domain_error("downstream_trajectory: far-point trajectory has no intervals");
  if (!(R_pre > 0.0))
    throw domain_error("downstream_trajectory: R_pre must be positive");
  const double C_H = match.C_H;
  if (!(C_H > vinf.samples.front().C && C_H < vinf.samples.back().C))
    throw domain_error("downstream_trajectory: C_H outside the far-point branch");

  // Keep the strictly-below-C_H part of the upward integration and reverse
  // it, so x increases along the branch; the head is the exact post-shock
  // state.  Interval slopes are dV/dC evaluated from the phase functions.
  const double guard = 1e-9 * (1.0 + std::abs(C_H));
  Trajectory t;
  t.samples.push_back(match.P_H);
  for (std::size_t i = vinf.size(); i-- > 0;) {
    if (vinf.samples[i].C < C_H - guard) t.samples.push_back(vinf.samples[i]);
  }
  if (t.samples.size() < 2)
    throw domain_error("downstream_trajectory: no samples below C_H");

  t.ivals.resize(t.samples.size() - 1);
  auto slope = [&](const PhasePoint& q) {
    return eval_G(p, q) / eval_F(p, q);
  };
  for (std::size_t i = 0; i < t.ivals.size(); ++i) {
    t.ivals[i].axis = Axis::C;
    t.ivals[i].dir = -1;
    t.ivals[i].slope0 = slope(t.samples[i]);
    t.ivals[i].slope1 = slope(t.samples[i + 1]);
  }

  attach_x(p, t, XAnchor{0, match.x_H});
  const double R_plus =
      R_pre * (1.0 + match.pre_state.V) / (1.0 + match.P_H.V);
  attach_R(p, t, RAnchor{0, R_plus});
  return t;
}

} // namespace guderley
