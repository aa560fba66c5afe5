#pragma once

#include "guderley/params.hpp"

namespace guderley {

struct PhasePoint {
  double V = 0.0;
  double C = 0.0;
};

struct DFG {
  double D = 0.0;
  double F = 0.0;
  double G = 0.0;
};

struct DFGGrad {
  double DV = 0.0, DC = 0.0;
  double FV = 0.0, FC = 0.0;
  double GV = 0.0, GC = 0.0;
};

// Coefficient functions of the phase ODE dC/dV = F/G with
//   D = (1+V)^2 - C^2
//   G = C^2 g1(V) - g2(V)
//   F = C (C^2 f1(V) - f2(V))
double g1(const Params& p, double V);
double g2(const Params& p, double V);
double f1(const Params& p, double V); // pole at V = -1
double f2(const Params& p, double V);

double eval_D(const PhasePoint& q);
double eval_G(const Params& p, const PhasePoint& q);
double eval_F(const Params& p, const PhasePoint& q); // throws domain_error at V = -1
DFG eval_DFG(const Params& p, const PhasePoint& q);
DFGGrad eval_DFG_grad(const Params& p, const PhasePoint& q);

// Critical points of the phase ODE.  P4/P5 exist only where g2/g1 >= 0 at V4;
// p45_real flags that.  ring is the first critical point met coming up the
// lower half plane (the more negative of C5, C9), the blocking point for the
// expanding-wave trajectory.
struct CriticalPointSet {
  PhasePoint P0, P1, P2, P3, P4, P5, P6, P7, P8, P9;
  double Vbar_inf = 0.0;
  double w = 0.0;
  bool p45_real = false;
  PhasePoint ring;
  double ringC = 0.0;
};

// Throws domain_error when z > z_M (sonic triple points P6/P8 leave the reals).
CriticalPointSet critical_points(const Params& p);

struct ZInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
  bool contains(double z) const { return !empty && z > lo && z <= hi; }
};

// Distinguished z values at fixed gamma (and m where it matters), plus the
// admissible z windows for a triple-point passage through P6 resp. P8.
struct SpecialZ {
  double z_M = 0.0;      // w(z_M) = 0, P6 and P8 merge
  double z_g = 0.0;      // V4 crosses the sonic-triple locus
  double z_0 = 0.0;      // (22 - 5 gamma)/125
  double gamma_g = 0.0;  // V4 hits the double point: root in (5/2, 3), m only
  double gamma_u = 0.0;  // z_0 = z_g crossover: root in the bracketed band, m only
  ZInterval Zring_P6;
  ZInterval Zring_P8;
};

SpecialZ special_z(double gamma, int m, double gamma_star = 5.0 / 3.0);

// Roots in V of F = 0 resp. G = 0 at fixed C < 0.
// branch_VF_plus: the branch through P9 with V >= V8, defined for C <= C9.
// branch_VG* : the three real roots of the G cubic, ordered
//              VG_minus < VG < VG_plus (at C = 0: -lambda, -1, 0).
double branch_VF_plus(const Params& p, double C);
double branch_VG(const Params& p, double C);
double branch_VG_minus(const Params& p, double C);
double branch_VG_plus(const Params& p, double C);

// Strong-shock state reached from a cold quiescent gas; depends on gamma only.
PhasePoint p1_state(double gamma);

} // namespace guderley
