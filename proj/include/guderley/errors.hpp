#pragma once

#include <stdexcept>

namespace guderley {

// Error categories, aligned with the CLI exit codes:
//   domain_error      -> 2  (bad input: out-of-range parameter, invalid point)
//   convergence_error -> 3  (bracketing / iteration failure, step underflow, budget)
//   theory_violation  -> 4  (a structural property the solution must satisfy fails)
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct theory_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace guderley
