#pragma once

#include <cstddef>
#include <vector>

#include "guderley/phase_plane.hpp"

namespace guderley {

// Independent variable a trajectory interval is integrated in.
enum class Axis { V, C };

enum class EventKind { sonic_cross, G_zero_cross, F_zero_cross, line_cross, stop };

struct Event {
  EventKind kind = EventKind::stop;
  double kappa = 0.0;   // line_cross only
  std::size_t sample = 0;
  PhasePoint at;
  int stop_index = -1;  // >= 0 when kind == stop
};

struct TrajInterval {
  Axis axis = Axis::V;
  int dir = 0;             // +-1: direction of the active variable
  double slope0 = 0.0;     // d(dependent)/d(active) at the left sample
  double slope1 = 0.0;     // ... at the right sample
};

struct Trajectory {
  std::vector<PhasePoint> samples;
  std::vector<TrajInterval> ivals; // samples.size() - 1 entries
  std::vector<Event> events;
  std::vector<double> lnx; // per sample, filled by attach_x
  std::vector<double> lnR; // per sample, filled by attach_R
  int x_sign = 0;          // sign of x on this branch, set by attach_x

  bool has_x() const { return !lnx.empty(); }
  bool has_R() const { return !lnR.empty(); }
  std::size_t size() const { return samples.size(); }
};

} // namespace guderley
