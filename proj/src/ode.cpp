#include "guderley/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "guderley/detail/dp45.hpp"
#include "guderley/detail/rootfind.hpp"
#include "guderley/errors.hpp"
#include "guderley/phase_plane.hpp"

namespace guderley {

namespace {

std::string at_point(const PhasePoint& q) {
  return "(V, C) = (" + std::to_string(q.V) + ", " + std::to_string(q.C) + ")";
}

// F without the pole guard of eval_F: IEEE division at V = -1 so a wild
// trial stage yields inf/NaN and gets rejected instead of throwing.
DFG raw_dfg(const Params& p, const PhasePoint& q) {
  const double h = 1.0 + q.V;
  const double C2 = q.C * q.C;
  DFG r;
  r.D = h * h - C2;
  r.G = C2 * g1(p, q.V) - g2(p, q.V);
  r.F = q.C * (C2 * (1.0 + p.m * p.z / h) - f2(p, q.V));
  return r;
}

PhasePoint make_point(Axis axis, double t, double y) {
  return axis == Axis::V ? PhasePoint{t, y} : PhasePoint{y, t};
}

double slope_of(const Params& p, Axis axis, const PhasePoint& q) {
  const DFG d = raw_dfg(p, q);
  return axis == Axis::V ? d.F / d.G : d.G / d.F;
}

struct Detector {
  EventKind kind = EventKind::stop;
  double kappa = 0.0;
  bool terminal = false;
  int direction = 0;
  int stop_index = -1;
  StopSpec stop;

  double eval(const Params& p, const PhasePoint& q) const {
    switch (kind) {
      case EventKind::sonic_cross:
        return -eval_D(q);
      case EventKind::G_zero_cross:
        return raw_dfg(p, q).G;
      case EventKind::F_zero_cross:
        return raw_dfg(p, q).F;
      case EventKind::line_cross:
        return q.C + kappa * (1.0 + q.V);
      case EventKind::stop:
        switch (stop.what) {
          case StopSpec::What::V_reaches:
            return q.V - stop.value;
          case StopSpec::What::C_reaches:
            return q.C - stop.value;
          case StopSpec::What::ball_around: {
            const double dv = q.V - stop.center.V;
            const double dc = q.C - stop.center.C;
            return dv * dv + dc * dc - stop.radius * stop.radius;
          }
        }
    }
    return 0.0;
  }
};

struct Crossing {
  bool found = false;
  std::size_t det = 0;
  double theta = 1.0;
  PhasePoint at;
  double slope_at = 0.0;
};

constexpr double kGrid[6] = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};

} // namespace

Trajectory integrate_phase(const Params& p, PhasePoint start,
                           std::optional<double> start_slope_hint,
                           const std::vector<EventSpec>& events,
                           const std::vector<StopSpec>& stops,
                           const IntegrateOptions& opt) {
  std::vector<Detector> dets;
  dets.reserve(stops.size() + events.size());
  for (std::size_t i = 0; i < stops.size(); ++i) {
    Detector d;
    d.kind = EventKind::stop;
    d.terminal = true;
    d.stop_index = static_cast<int>(i);
    d.stop = stops[i];
    dets.push_back(d);
  }
  for (const EventSpec& e : events) {
    Detector d;
    d.kind = e.kind;
    d.kappa = e.kappa;
    d.terminal = e.terminal;
    d.direction = e.direction;
    dets.push_back(d);
  }

  Axis axis = opt.axis0;
  int dir = opt.dir0 >= 0 ? +1 : -1;
  double t = axis == Axis::V ? start.V : start.C;
  double y = axis == Axis::V ? start.C : start.V;

  auto f = [&](double tt, double yy) {
    return slope_of(p, axis, make_point(axis, tt, yy));
  };

  double k1;
  if (start_slope_hint) {
    k1 = axis == Axis::V ? *start_slope_hint : 1.0 / *start_slope_hint;
  } else {
    k1 = f(t, y);
  }

  auto ball_cap = [&](const PhasePoint& q) {
    double cap = opt.max_dstep;
    for (const StopSpec& s : stops) {
      if (s.what != StopSpec::What::ball_around) continue;
      const double dist = std::hypot(q.V - s.center.V, q.C - s.center.C);
      cap = std::min(cap, std::max(dist, s.radius) / 3.0);
    }
    return cap;
  };

  double hmag = std::min({1e-4, opt.max_dstep, ball_cap(start)});
  double errn_prev = 1.0;

  Trajectory traj;
  traj.samples.push_back(start);

  for (int step = 0; step < opt.max_steps; ++step) {
    if (hmag < 1e-14 * std::max(1.0, std::abs(t)))
      throw convergence_error("step underflow near " +
                              at_point(make_point(axis, t, y)));

    const double h = dir * hmag;
    const detail::DP45Out out = detail::dp45_step(f, t, y, h, k1);
    const double errn =
        std::abs(out.err) /
        (opt.atol + opt.rtol * std::max(std::abs(y), std::abs(out.y5)));
    if (!std::isfinite(errn) || errn > 1.0) {
      const double shrink = std::isfinite(errn)
                                ? std::max(0.2, 0.9 * std::pow(errn, -0.2))
                                : 0.2;
      hmag *= shrink;
      continue;
    }

    // Dense output over the accepted step, cubic Hermite in theta in [0,1].
    const double m0h = k1 * h, m1h = out.k7 * h;
    auto dense = [&](double theta) {
      return make_point(axis, t + theta * h,
                        detail::hermite(y, m0h, out.y5, m1h, theta));
    };
    // Fifth-order point at a fraction of the step, used to pin crossings
    // onto the integrated solution rather than the interpolant.
    auto partial = [&](double theta) {
      if (theta <= 0.0) return make_point(axis, t, y);
      return make_point(axis, t + theta * h,
                        detail::dp45_step(f, t, y, theta * h, k1).y5);
    };

    Crossing best;
    for (std::size_t di = 0; di < dets.size(); ++di) {
      const Detector& det = dets[di];
      double e[6];
      double scale = 0.0;
      for (int j = 0; j < 6; ++j) {
        e[j] = det.eval(p, dense(kGrid[j]));
        scale = std::max(scale, std::abs(e[j]));
      }
      if (!(scale > 0.0)) continue;
      const double dead = 1e-8 * scale;

      int last = -1;
      for (int j = 0; j < 6; ++j) {
        if (std::abs(e[j]) <= dead) continue;
        if (last >= 0 && (e[last] > 0.0) != (e[j] > 0.0)) {
          const bool rising = e[last] < 0.0;
          if (det.direction == 0 || (det.direction > 0) == rising) {
            auto phi = [&](double theta) { return det.eval(p, partial(theta)); };
            const double ta = kGrid[last], tb = kGrid[j];
            const double fa = phi(ta), fb = phi(tb);
            double theta;
            if (fa == 0.0 || fb == 0.0 || (fa > 0.0) != (fb > 0.0)) {
              theta = detail::brent(phi, ta, tb, fa, fb, 1e-13, 0.0);
            } else {
              // The interpolant and the solution disagree about the bracket;
              // fall back to locating on the interpolant.
              auto ghost = [&](double th) { return det.eval(p, dense(th)); };
              theta = detail::brent(ghost, ta, tb, e[last], e[j], 1e-13, 0.0);
            }
            if (theta > 1e-9) {
              if (!best.found || theta < best.theta) {
                best.found = true;
                best.det = di;
                best.theta = theta;
                best.at = partial(theta);
              }
              break;
            }
            // A hit at theta ~ 0 is the echo of the crossing the previous
            // step was cut at; keep scanning past it.
          }
        }
        last = j;
      }
    }

    PhasePoint q_end;
    double slope_end;
    if (best.found) {
      q_end = best.at;
      slope_end = slope_of(p, axis, q_end);
    } else {
      q_end = make_point(axis, t + h, out.y5);
      slope_end = out.k7;
    }

    traj.samples.push_back(q_end);
    traj.ivals.push_back({axis, dir, k1, slope_end});

    if (best.found) {
      const Detector& det = dets[best.det];
      Event ev;
      ev.kind = det.kind;
      ev.kappa = det.kappa;
      ev.sample = traj.samples.size() - 1;
      ev.at = q_end;
      ev.stop_index = det.stop_index;
      traj.events.push_back(ev);
      if (det.terminal) return traj;
    }

    const double y_prev = y;
    t = axis == Axis::V ? q_end.V : q_end.C;
    y = axis == Axis::V ? q_end.C : q_end.V;
    k1 = slope_end;
    if (!best.found) {
      const double fac = std::clamp(
          0.9 * std::pow(errn, -0.14) * std::pow(errn_prev, 0.08), 0.2, 5.0);
      errn_prev = std::max(errn, 1e-4);
      hmag *= fac;
    }

    // Swap the independent variable when the slope leaves [1/1.1, 1.1] in
    // magnitude; the 10% band keeps the choice from chattering.
    const double sl = slope_of(p, Axis::V, q_end);
    const bool want_C = axis == Axis::V && std::abs(sl) > 1.1;
    const bool want_V = axis == Axis::C && std::abs(sl) < 1.0 / 1.1;
    if (want_C || want_V) {
      int dir_new = 0;
      if (y != y_prev) dir_new = y > y_prev ? +1 : -1;
      else if (sl != 0.0 && std::isfinite(sl))
        dir_new = (sl > 0.0 ? +1 : -1) * dir;
      if (dir_new != 0) {
        const double factor = want_C ? std::abs(sl) : std::abs(1.0 / sl);
        axis = want_C ? Axis::C : Axis::V;
        dir = dir_new;
        std::swap(t, y);
        k1 = slope_of(p, axis, q_end);
        hmag = std::isfinite(factor) && factor > 0.0 ? hmag * factor : 1e-4;
      }
    }
    hmag = std::min({hmag, opt.max_dstep, ball_cap(q_end)});
  }

  throw convergence_error("step budget of " + std::to_string(opt.max_steps) +
                          " exhausted near " + at_point(make_point(axis, t, y)));
}

} // namespace guderley
