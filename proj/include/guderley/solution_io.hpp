#pragma once

#include <string>

#include "guderley/fields.hpp"

namespace guderley {

// Versioned JSON serialization of the full solution: parameters, the three
// trajectory branches with their interpolation data, and the shock and
// terminal constants.  Trajectory events are not round-tripped; a loaded
// solution evaluates identically but carries no event history.  Loading
// validates the format tag, version, and array shapes, and throws
// domain_error on malformed input with the parse location.
std::string solution_to_json(const GlobalSolution& sol);
GlobalSolution solution_from_json(const std::string& text);

void save_solution(const GlobalSolution& sol, const std::string& path);
GlobalSolution load_solution(const std::string& path);

} // namespace guderley
