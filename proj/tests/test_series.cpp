#include "guderley/series.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "guderley/errors.hpp"
#include "guderley/phase_plane.hpp"
#include "test_util.hpp"

using namespace guderley;
using testutil::uniform;

namespace {

// minimal truncated power-series arithmetic, independent of the recurrence
struct PS {
  std::vector<double> c; // c[k] multiplies C^k
  explicit PS(size_t n) : c(n, 0.0) {}
};

PS mul(const PS& a, const PS& b) {
  PS r(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; i + j < a.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

PS axpy(double s, const PS& a, const PS& b) {
  PS r = b;
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += s * a.c[i];
  return r;
}

PS shift(const PS& a, int k) {
  PS r(a.c.size());
  for (size_t i = 0; i + k < a.c.size(); ++i) r.c[i + k] = a.c[i];
  return r;
}

// residual of V'(C) (1+V) F - (1+V) G composed as polynomials in (V, V', C)
PS ode_residual_series(const Params& p, const OriginSeries& s, size_t K) {
  PS V(K), dV(K);
  for (int l = 1; l <= s.N && static_cast<size_t>(l) < K; ++l) {
    V.c[l] = s.v[l];
    if (static_cast<size_t>(l - 1) < K) dV.c[l - 1] = l * s.v[l];
  }
  PS h = V;
  h.c[0] += 1.0; // 1 + V
  PS h_mz = h;
  h_mz.c[0] += p.m * p.z; // 1 + V + mz

  PS f2V = mul(h, h);
  for (auto& x : f2V.c) x *= p.a1;
  f2V = axpy(-p.a2, h, f2V);
  f2V.c[0] += p.a3;

  PS inner = axpy(-1.0, mul(h, f2V), shift(h_mz, 2));
  PS A = shift(mul(dV, inner), 1);

  PS g1V = V;
  for (auto& x : g1V.c) x *= (p.m + 1);
  g1V.c[0] += 2.0 * p.m * p.z;
  PS B = shift(mul(g1V, h), 2);

  const double mgz = p.m * p.gamma * p.z;
  PS V2 = mul(V, V), V3 = mul(V2, V), V4 = mul(V2, V2);
  PS quart = V4;
  quart = axpy(3.0 + mgz, V3, quart);
  quart = axpy(3.0 + 2.0 * mgz, V2, quart);
  quart = axpy(1.0 + mgz, V, quart);

  PS R = axpy(-1.0, B, A);
  return axpy(1.0, quart, R);
}

} // namespace

TEST_CASE("v2 at the hand-checked spot") {
  Params p = params_from_z(1.4, 2, 0.1);
  OriginSeries s = series_coeffs(p, 0.0, 10);
  CHECK(s.v[1] == 0.0);
  CHECK(s.v[2] == doctest::Approx(-0.3125).epsilon(1e-14));
}

TEST_CASE("recurrence satisfies the phase ODE as a formal series") {
  for (int trial = 0; trial < 24; ++trial) {
    const double gamma = uniform(1.05, 3.0);
    const int m = (trial % 2) + 1;
    const double zM = special_z(gamma, m).z_M;
    const double z = uniform(0.3 * zM, zM);
    Params p = params_from_z(gamma, m, z);
    const double v1 = (trial % 3 == 0) ? 0.0 : -uniform(0.1, 3.0);
    const int N = 16;
    OriginSeries s = series_coeffs(p, v1, N);

    PS R = ode_residual_series(p, s, N + 1);
    double scale = 1.0;
    for (int l = 1; l <= N; ++l)
      scale = std::max(scale, std::abs(s.v[l]));
    for (int k = 0; k <= N; ++k) {
      CAPTURE(k);
      CHECK(std::abs(R.c[k]) < 1e-10 * scale * scale * scale * scale);
    }
  }
}

TEST_CASE("ODE residual at C = 0.01 drops by >= 1e3 when N doubles") {
  Params p = params_from_z(1.5, 1, 0.14);
  const double C = 0.01;
  double res[2];
  int idx = 0;
  for (int N : {4, 8}) {
    OriginSeries s = series_coeffs(p, -1.0, N);
    SeriesEval e = series_eval(s, C);
    DFG dfg = eval_DFG(p, {e.V, C});
    res[idx++] = std::abs(e.dVdC * dfg.F - dfg.G);
  }
  // the N = 8 truncation may already sit on the roundoff floor
  CHECK(res[1] < std::max(1e-3 * res[0], 5e-17));
}

TEST_CASE("series_eval matches direct summation and guards its radius") {
  Params p = params_from_z(1.5, 1, 0.14);
  OriginSeries s = series_coeffs(p, -0.5, 30);
  const double C = 0.02;
  double direct = 0.0, ddirect = 0.0;
  for (int l = 1; l <= s.N; ++l) {
    direct += s.v[l] * std::pow(C, l);
    ddirect += l * s.v[l] * std::pow(C, l - 1);
  }
  SeriesEval e = series_eval(s, C);
  CHECK(e.V == doctest::Approx(direct).epsilon(1e-13));
  CHECK(e.dVdC == doctest::Approx(ddirect).epsilon(1e-13));
  CHECK(s.radius_est > 0.0);
  CHECK_THROWS_AS((void)series_eval(s, 2.0 * s.radius_est), convergence_error);
}

TEST_CASE("coefficient growth stays geometric out to N = 60") {
  Params p = params_from_z(1.4, 2, 0.13);
  OriginSeries s40 = series_coeffs(p, -1.0, 40);
  OriginSeries s60 = series_coeffs(p, -1.0, 60);
  CHECK(s60.radius_est > 0.0);
  CHECK(s60.radius_est < 10.0);
  CHECK(s40.radius_est == doctest::Approx(s60.radius_est).epsilon(0.25));
  for (int l = 1; l <= 40; ++l)
    CHECK(s40.v[l] == doctest::Approx(s60.v[l]).epsilon(1e-14));
}

TEST_CASE("slope bound and v1 matching") {
  Params p = params_from_z(1.5, 1, 0.14);
  CriticalPointSet S = critical_points(p);
  const double s = slope_bound_s(p, S.P6);
  CHECK(s == doctest::Approx(-0.0786166).epsilon(1e-5));

  const double c1 = 3.0 * s; // inside (-inf, 2s]
  const double v1 = match_v1(p, S.P6, c1);
  CHECK(v1 == doctest::Approx(1.0 / c1).epsilon(1e-14));
  CHECK(v1 > 1.0 / (2.0 * s));
  CHECK(v1 < 0.0);

  CHECK_THROWS_AS((void)match_v1(p, S.P6, 0.5 * s), convergence_error);
  CHECK_THROWS_AS((void)match_v1(p, S.P6, 0.1), convergence_error);
  CHECK_THROWS_AS((void)series_coeffs(p, 0.5, 10), domain_error);
}

TEST_CASE("handoff radius sits inside a third of the convergence estimate") {
  Params p = params_from_z(1.5, 1, 0.14);
  OriginSeries s = series_coeffs(p, -1.0, 40);
  const double d = handoff_radius(s);
  CHECK(d > 0.0);
  CHECK(d <= 0.3 * s.radius_est + 1e-15);
  SeriesEval a = series_eval(s, d);
  CHECK(std::isfinite(a.V));
}
