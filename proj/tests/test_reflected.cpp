#include "guderley/reflected.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "doctest.h"
#include "guderley/collapse.hpp"
#include "guderley/continuation.hpp"
#include "guderley/errors.hpp"
#include "guderley/interp.hpp"
#include "guderley/jump.hpp"
#include "guderley/params.hpp"
#include "guderley/phase_plane.hpp"
#include "test_util.hpp"

using namespace guderley;
using testutil::close_rel;

namespace {

struct ReflCase {
  Params p;
  CriticalPointSet cps;
  CollapseSolution cs;
  ExtensionResult ext;
  Trajectory vinf;
  JumpLocus locus;
  MatchResult match;
  double R_pre = 0.0;
  Trajectory down;
};

// The full pipeline behind each case (exponent, three integration legs, the
// matching root solve) is shared between test cases instead of recomputed.
const ReflCase& refl_case(double gamma, int m) {
  static std::map<std::pair<double, int>, std::unique_ptr<ReflCase>> cache;
  const auto key = std::make_pair(gamma, m);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto rc = std::make_unique<ReflCase>();
    const LambdaResult r = find_lambda_std(gamma, m);
    rc->p = params_from_z(gamma, m, r.z);
    rc->cps = critical_points(rc->p);
    rc->cs = collapse_trajectory(rc->p);
    const Trajectory arc = continue_through_origin(rc->p, rc->cs);
    rc->ext = maximal_extension(rc->p, arc);
    rc->vinf = pinfty_trajectory(rc->p);
    rc->locus = jump_locus(rc->p, rc->ext.traj);
    rc->match = find_PH(rc->p, rc->locus, rc->vinf);
    rc->R_pre =
        std::exp(eval_at_C(rc->p, rc->ext.traj, rc->match.pre_state.C).lnR);
    rc->down = downstream_trajectory(rc->p, rc->match, rc->vinf, rc->R_pre);
    it = cache.emplace(key, std::move(rc)).first;
  }
  return *it->second;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double n = double(xs.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

TEST_CASE("far-point constants match the closed forms") {
  // m = 1: Vbar = -z exactly.
  {
    const Params p = params_from_z(1.4, 1, 0.1);
    const SigmaInfo si = vbar_and_sigma(p);
    CHECK(std::abs(si.Vbar_inf + 0.1) <= 1e-15);
  }

  // gamma = 3, m = 2, z = 1/10: lambda = 8/5 and sigma = 10/13.
  {
    const Params p = params_from_z(3.0, 2, 0.1);
    const SigmaInfo si = vbar_and_sigma(p);
    CHECK(std::abs(p.lambda - 1.6) <= 1e-15);
    CHECK(std::abs(si.sigma - 10.0 / 13.0) <= 1e-12);
  }

  // The downstream sound-speed exponent always beats the similarity rate:
  // sigma * lambda = 1 + m z / (1 + Vbar) > 1.
  for (int m : {1, 2}) {
    for (double gamma : {1.1, 1.5, 2.0, 2.7}) {
      const SpecialZ sz = special_z(gamma, m);
      for (int k = 1; k <= 6; ++k) {
        const double z = sz.z_M * double(k) / 7.0;
        const Params p = params_from_z(gamma, m, z);
        const SigmaInfo si = vbar_and_sigma(p);
        CAPTURE(gamma);
        CAPTURE(m);
        CAPTURE(z);
        CHECK(si.sigma > 0.0);
        CHECK(si.sigma * p.lambda > 1.0);
      }
    }
  }
}

TEST_CASE("far-point trajectory descends inside its confinement strip") {
  for (auto [gamma, m] :
       {std::pair{1.5, 1}, std::pair{2.5, 2}, std::pair{3.0, 1}}) {
    CAPTURE(gamma);
    CAPTURE(m);
    const ReflCase& rc = refl_case(gamma, m);
    const Trajectory& v = rc.vinf;
    const SigmaInfo si = vbar_and_sigma(rc.p);
    const double scale = std::max(1.0, std::abs(rc.cps.ringC));

    REQUIRE(v.size() >= 2);
    CHECK(!v.has_x());

    // Starts at the asymptotic correction Vbar + A / C0^2.
    const double Vb = si.Vbar_inf;
    const double alpha = 1.0 + rc.p.m * rc.p.z / (1.0 + Vb);
    const double beta = (rc.p.m + 1) / alpha;
    const double A =
        Vb * (1.0 + Vb) * (rc.p.lambda + Vb) / (alpha * (2.0 + beta));
    const double c0 = v.samples.front().C;
    CHECK(c0 <= -1000.0 * scale);
    CHECK(std::abs(v.samples.front().V - Vb) <= 2.0 * std::abs(A) / (c0 * c0));

    // Monotone in both coordinates, strictly between Vring and Vbar, and
    // confined between the middle G root and the F branch through P9.
    for (std::size_t i = 0; i < v.size(); ++i) {
      const PhasePoint& q = v.samples[i];
      CAPTURE(i);
      if (i > 0) {
        REQUIRE(q.C > v.samples[i - 1].C);
        REQUIRE(q.V < v.samples[i - 1].V);
      }
      REQUIRE(q.V < Vb);
      REQUIRE(q.V > rc.cps.ring.V - 1e-6);
      REQUIRE(q.V > branch_VG(rc.p, q.C));
      if (q.C <= rc.cps.P9.C) REQUIRE(q.V < branch_VF_plus(rc.p, q.C));
    }

    // Ends at the ring point.
    CHECK(std::abs(v.samples.back().C - rc.cps.ringC) <= 2e-7 * scale);
    CHECK(std::abs(v.samples.back().V - rc.cps.ring.V) <= 1e-6);

    // Pushing the start twice as far out does not move the trajectory.
    const Trajectory v2 = pinfty_trajectory(rc.p, 2.0 * c0);
    for (double C : {-5.0, -2.0, -1.0}) {
      CAPTURE(C);
      const double d =
          std::abs(eval_at_C(rc.p, v, C).q.V - eval_at_C(rc.p, v2, C).q.V);
      CHECK(d <= 1e-9);
    }
  }
}

TEST_CASE("jump relations pin the locus endpoints") {
  for (auto [gamma, m] : {std::pair{1.5, 1}, std::pair{2.5, 2}}) {
    CAPTURE(gamma);
    CAPTURE(m);
    const ReflCase& rc = refl_case(gamma, m);
    const JumpLocus& loc = rc.locus;

    REQUIRE(!loc.pre.empty());
    REQUIRE(loc.pre.size() == loc.post.size());

    // The origin maps to the strong-shock image point.
    const PhasePoint p1t = jump(rc.p, PhasePoint{0.0, 0.0});
    const double V1 = -2.0 / (gamma + 1.0);
    const double C1 = std::sqrt(2.0 * gamma * (gamma - 1.0)) / (gamma + 1.0);
    CHECK(std::abs(p1t.V - V1) <= 1e-14);
    CHECK(std::abs(p1t.C + C1) <= 1e-14);

    // The locus starts next to it: the extension's first samples sit just
    // outside the origin.
    CHECK(std::hypot(loc.post.front().V - V1, loc.post.front().C + C1) <=
          1e-2);

    // The sonic endpoint is a fixed point of the jump.
    const PhasePoint s = rc.ext.sonic;
    const PhasePoint js = jump(rc.p, s);
    CHECK(std::abs(js.V - s.V) <= 1e-10 * (1.0 + std::abs(s.V)));
    CHECK(std::abs(js.C - s.C) <= 1e-10 * (1.0 + std::abs(s.C)));

    // Post states sit strictly below their pre states in both coordinates
    // away from the sonic line.
    for (std::size_t i = 0; i < loc.pre.size(); ++i) {
      CAPTURE(i);
      REQUIRE(classify_region(rc.p, loc.pre[i]) == RegionTag::S_U);
      CHECK(loc.post[i].V <= loc.pre[i].V + 1e-12);
      CHECK(loc.post[i].C <= loc.pre[i].C + 1e-12);
      if (1.0 + loc.pre[i].V + loc.pre[i].C > 1e-6) {
        CHECK(loc.post[i].V < loc.pre[i].V);
        CHECK(loc.post[i].C < loc.pre[i].C);
      }
    }
  }
}

TEST_CASE("shock matching lands on the frozen fixtures") {
  struct Fixture {
    double gamma;
    int m;
    double x_H, V_H, C_H, preV, preC, R_pre, R_plus;
  };
  const Fixture table[] = {
      {1.2, 1, 6.09995722, -0.142368752, -1.954622733, 3.127757464,
       -1.479954390, 122.6, 590.08},
      {1.2, 2, 6.4312315, -0.190210533, -1.660649555, 2.169547551,
       -1.348602861, 539.58, 2111.9},
      {1.4, 1, 2.81561093, -0.157320458, -1.469412387, 1.275671839,
       -1.124925802, 28.773, 77.703},
      {1.4, 2, 2.68849265, -0.213563608, -1.245171520, 0.773981735,
       -1.022128326, 64.317, 145.08},
      {1.5, 1, 2.23614834, -0.159570513, -1.368676543, 0.951246062,
       -1.047862401, 19.048, 44.224},
      {1.5, 2, 2.08773338, -0.217672505, -1.165069714, 0.544515845,
       -0.956040907, 36.331, 71.727},
      {5.0 / 3.0, 1, 1.69479267, -0.159884158, -1.269375708, 0.648504413,
       -0.969909255, 11.71, 22.979},
      {5.0 / 3.0, 2, 1.54789493, -0.219335794, -1.089205627, 0.334934811,
       -0.891906637, 18.876, 32.278},
      {1.8, 1, 1.44082017, -0.158374042, -1.221484882, 0.506742482,
       -0.931262506, 8.8441, 15.833},
      {1.8, 2, 1.30319496, -0.217952212, -1.054316784, 0.238710728,
       -0.861662157, 13.052, 20.674},
      {2.0, 1, 1.19963052, -0.154598133, -1.176135795, 0.372639162,
       -0.893632157, 6.4615, 10.491},
      {2.0, 2, 1.07725388, -0.213479315, -1.023136141, 0.149463270,
       -0.833955666, 8.7061, 12.724},
      {2.5, 1, 0.900941929, -0.142390641, -1.123672591, 0.208849049,
       -0.847510139, 3.9696, 5.5953},
      {2.5, 2, 0.809804551, -0.197559943, -0.992424184, 0.045267784,
       -0.805232724, 4.7217, 6.1505},
      {3.0, 1, 0.763159927, -0.130105991, -1.104188931, 0.135741115,
       -0.828275862, 2.9913, 3.9055},
      {3.0, 2, 0.693969698, -0.180916845, -0.985924014, 0.002916106,
       -0.798187109, 3.3447, 4.0954},
      {1.1, 1, 13.5363982, -0.121186126, -2.783578132, 7.438780125,
       -2.055789972, 620.5, 5958.3},
      {1.1, 2, 16.1540883, -0.159931252, -2.446630204, 5.826295204,
       -1.921293788, 7005.7, 56927.0},
  };

  for (const Fixture& f : table) {
    CAPTURE(f.gamma);
    CAPTURE(f.m);
    const ReflCase& rc = refl_case(f.gamma, f.m);
    const MatchResult& mr = rc.match;

    CHECK(mr.intersection_count == 1);
    CHECK(close_rel(mr.x_H, f.x_H, 1e-6));
    CHECK(std::abs(mr.P_H.V - f.V_H) <= 1e-6);
    CHECK(std::abs(mr.P_H.C - f.C_H) <= 1e-6);
    CHECK(std::abs(mr.pre_state.V - f.preV) <= 1e-6);
    CHECK(std::abs(mr.pre_state.C - f.preC) <= 1e-6);
    CHECK(close_rel(rc.R_pre, f.R_pre, 5e-4));
    CHECK(close_rel(std::exp(rc.down.lnR.front()), f.R_plus, 5e-4));

    // Structural facts behind the fixture: the matched state is the jump of
    // an interior extension point and lands on the far-point trajectory,
    // below the ring sound speed, with entropy produced at the shock.
    CHECK(mr.C_H < rc.cps.ringC);
    CHECK(mr.x_H < rc.ext.x_s);
    CHECK(mr.x_H > 0.0);
    const PhasePoint jp = jump(rc.p, mr.pre_state);
    CHECK(std::abs(jp.V - mr.P_H.V) <= 1e-14);
    CHECK(std::abs(jp.C - mr.P_H.C) <= 1e-14);
    CHECK(std::abs(eval_at_C(rc.p, rc.vinf, mr.C_H).q.V - mr.P_H.V) <= 1e-10);
    CHECK(classify_region(rc.p, mr.pre_state) == RegionTag::S_U);
    CHECK(entropy_check(rc.p, mr.pre_state));
  }
}

TEST_CASE("post-shock velocity is monotone along the locus below gamma-star") {
  for (int m : {1, 2}) {
    for (double gamma : {1.2, 1.4, 1.5, 5.0 / 3.0}) {
      CAPTURE(gamma);
      CAPTURE(m);
      const ReflCase& rc = refl_case(gamma, m);
      const SpecialZ sz = special_z(gamma, m);
      REQUIRE(rc.cs.triple == TriplePoint::P6);
      REQUIRE(rc.p.z > sz.z_g);
      REQUIRE(rc.p.z <= sz.z_M);

      // Locus order runs from the origin outward, so C decreases along it;
      // the post-shock velocity rises monotonically, which is what makes
      // the far-point crossing unique.
      const JumpLocus& loc = rc.locus;
      for (std::size_t i = 1; i < loc.pre.size(); ++i) {
        CAPTURE(i);
        REQUIRE(loc.pre[i].C < loc.pre[i - 1].C);
        REQUIRE(loc.post[i].V > loc.post[i - 1].V);
      }

      // The ray slope C/(1+V) of the pre states is monotone too.
      for (std::size_t i = 1; i < loc.pre.size(); ++i) {
        CAPTURE(i);
        const double s0 = loc.pre[i - 1].C / (1.0 + loc.pre[i - 1].V);
        const double s1 = loc.pre[i].C / (1.0 + loc.pre[i].V);
        REQUIRE(s1 < s0);
      }
    }
  }
}

TEST_CASE("downstream branch decays to the far point at the predicted rate") {
  for (auto [gamma, m] :
       {std::pair{1.5, 1}, std::pair{2.5, 2}, std::pair{1.2, 1}}) {
    CAPTURE(gamma);
    CAPTURE(m);
    const ReflCase& rc = refl_case(gamma, m);
    const Trajectory& d = rc.down;
    const SigmaInfo si = vbar_and_sigma(rc.p);

    REQUIRE(d.size() >= 100);
    REQUIRE(d.has_x());
    REQUIRE(d.has_R());
    CHECK(d.x_sign == 1);

    // Head anchored at the matched state.
    CHECK(d.samples.front().V == rc.match.P_H.V);
    CHECK(d.samples.front().C == rc.match.P_H.C);
    CHECK(close_rel(std::exp(d.lnx.front()), rc.match.x_H, 1e-12));

    // Density jump follows mass conservation across the shock and compresses.
    const double R_plus = std::exp(d.lnR.front());
    const double mass = rc.R_pre * (1.0 + rc.match.pre_state.V) /
                        (1.0 + rc.match.P_H.V);
    CHECK(close_rel(R_plus, mass, 1e-12));
    CHECK(R_plus > rc.R_pre);

    // x grows toward +infinity while V climbs back to Vbar from below.
    for (std::size_t i = 1; i < d.size(); ++i) {
      REQUIRE(d.lnx[i] > d.lnx[i - 1]);
      REQUIRE(d.samples[i].C < d.samples[i - 1].C);
      REQUIRE(d.samples[i].V > d.samples[i - 1].V);
      REQUIRE(d.samples[i].V < si.Vbar_inf);
    }
    CHECK(std::abs(d.samples.back().V - si.Vbar_inf) <= 1e-6);
    CHECK(std::exp(d.lnx.back()) > 100.0 * rc.match.x_H);

    // The density relaxes from its post-shock peak.
    CHECK(std::exp(d.lnR.back()) < 0.5 * R_plus);

    // Tail exponents: |C| ~ x^sigma and |V - Vbar| ~ x^(-2 sigma) over the
    // last decade of each quantity.
    std::vector<double> lx, ly;
    const double lo = std::log(std::abs(d.samples.back().C)) - std::log(10.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double lc = std::log(std::abs(d.samples[i].C));
      if (lc < lo) continue;
      lx.push_back(d.lnx[i]);
      ly.push_back(lc);
    }
    REQUIRE(lx.size() >= 20);
    const double sC = fit_slope(lx, ly);
    CHECK(close_rel(sC, si.sigma, 1e-4));

    lx.clear();
    ly.clear();
    const double vend = std::abs(d.samples.back().V - si.Vbar_inf);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double dv = std::abs(d.samples[i].V - si.Vbar_inf);
      if (dv <= 1e-14 || dv >= 10.0 * vend || dv < 0.999 * vend) continue;
      lx.push_back(d.lnx[i]);
      ly.push_back(std::log(dv));
    }
    REQUIRE(lx.size() >= 20);
    const double sV = fit_slope(lx, ly);
    CHECK(close_rel(sV, -2.0 * si.sigma, 1e-4));
  }
}

TEST_CASE("pre-shock parabola points map below the ring sound speed") {
  // Points (V, -sqrt(-3V/2)) lie in the supersonic strip exactly for
  // V >= (sqrt(33) - 7)/4, and throughout the double-point band their jump
  // images stay below C5.
  const double Vlo = (std::sqrt(33.0) - 7.0) / 4.0;
  for (int m : {1, 2}) {
    const SpecialZ band = special_z(3.0, m);
    const double gamma_g = band.gamma_g;
    for (int i = 0; i <= 4; ++i) {
      const double gamma = gamma_g + (3.0 - gamma_g) * double(i) / 4.0;
      const SpecialZ sz = special_z(gamma, m);
      for (int j = 1; j <= 4; ++j) {
        const double z = sz.z_g + (sz.z_M - sz.z_g) * double(j) / 4.0;
        const Params p = params_from_z(gamma, m, z);
        const CriticalPointSet cps = critical_points(p);
        CAPTURE(gamma);
        CAPTURE(m);
        CAPTURE(z);
        REQUIRE(cps.p45_real);
        for (int k = 1; k <= 10; ++k) {
          const double V = Vlo * (1.0 - double(k) / 11.0);
          const PhasePoint q{V, -std::sqrt(-1.5 * V)};
          CAPTURE(V);
          REQUIRE(classify_region(p, q) == RegionTag::S_U);
          CHECK(jump(p, q).C < cps.P5.C);
        }
        // Just past the strip boundary the parabola exits the supersonic
        // region.
        const double Vout = Vlo - 0.01;
        CHECK(classify_region(p, PhasePoint{Vout, -std::sqrt(-1.5 * Vout)}) !=
              RegionTag::S_U);
      }
    }
  }
}

TEST_CASE("reflected construction rejects invalid inputs") {
  const ReflCase& rc = refl_case(1.5, 1);

  // Far-point start must sit well outside the ring region.
  CHECK_THROWS_AS(pinfty_trajectory(rc.p, -1.0), domain_error);

  // Locus needs a usable extension.
  CHECK_THROWS_AS(jump_locus(rc.p, Trajectory{}), domain_error);

  // Matching needs a nonempty locus with x attached.
  CHECK_THROWS_AS(find_PH(rc.p, JumpLocus{}, rc.vinf), domain_error);
  {
    JumpLocus loc = rc.locus;
    loc.ext.lnx.clear();
    CHECK_THROWS_AS(find_PH(rc.p, loc, rc.vinf), domain_error);
  }

  // Downstream branch needs a positive upstream density and a far-point
  // trajectory that reaches past the matched state.
  CHECK_THROWS_AS(downstream_trajectory(rc.p, rc.match, rc.vinf, 0.0),
                  domain_error);
  CHECK_THROWS_AS(downstream_trajectory(rc.p, rc.match, rc.vinf, -1.0),
                  domain_error);
  {
    Trajectory stub = rc.vinf;
    stub.samples.resize(2);
    stub.ivals.resize(1);
    CHECK_THROWS_AS(downstream_trajectory(rc.p, rc.match, stub, rc.R_pre),
                    domain_error);
  }
}
