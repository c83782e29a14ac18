#include "coupled_fp/solver.hpp"

namespace coupled_fp {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::up: return "up";
    case Direction::down: return "down";
    case Direction::none: return "none";
  }
  return "none";
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::max_iterations: return "max_iterations";
    case Termination::stalled: return "stalled";
    case Termination::monotonicity_violation: return "monotonicity_violation";
  }
  return "unknown";
}

}  // namespace coupled_fp
