#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coupled_fp/operator.hpp"
#include "coupled_fp/ordered_space.hpp"

namespace coupled_fp {

enum class Direction { up, down, none };

enum class Termination { converged, max_iterations, stalled, monotonicity_violation };

std::string_view to_string(Direction d);
std::string_view to_string(Termination t);

/// Whether Z₀ launches a monotone iteration.
/// up:   x₀ ≤ F(x₀,y₀) and F(y₀,x₀) ≤ y₀  (Z₀ ≤₂ T(Z₀))
/// down: F(x₀,y₀) ≤ x₀ and y₀ ≤ F(y₀,x₀)  (T(Z₀) ≤₂ Z₀)
struct StartVerdict {
  bool admissible = false;
  Direction direction = Direction::none;
  std::string details;
};

template <class E, class D>
struct IterationTrace {
  std::vector<PairPoint<E>> iterates;    ///< possibly thinned; see iterate_index
  std::vector<std::size_t> iterate_index;
  std::vector<D> eta;                    ///< eta[n-1] = d₂(Z_n, Z_{n-1}), never thinned
  Termination termination = Termination::max_iterations;
  D residual{};                          ///< d₂(T(Z_N), Z_N)
  std::optional<D> error_bound;          ///< a-posteriori bound on d₂(Z_N, fixed point)
  std::size_t iterations = 0;
  StartVerdict start;

  const PairPoint<E>& endpoint() const { return iterates.back(); }
};

template <class D>
struct SolveOptions {
  D tol{};
  std::size_t max_iter = 10000;
  bool require_admissible = true;
  std::size_t keep_every = 1;  ///< thinning of stored iterates; the last one is always kept
};

/// Stall window: η must shrink by at least this relative factor over this many steps.
inline constexpr std::size_t kStallWindow = 50;
inline constexpr double kStallFactor = 1.0 - 1e-15;

template <class E, class D>
StartVerdict check_start(const CoupledOperator<E, D>& op, const PairPoint<E>& z0) {
  const auto& space = op.base();
  const PairPoint<E> t = product_T(op, z0);
  const Ordering first = space.leq(z0.first, t.first);
  const Ordering second = space.leq(t.second, z0.second);

  StartVerdict v;
  if (first == Ordering::incomparable || second == Ordering::incomparable) {
    v.details = "x0 or y0 is incomparable with its image under T";
  }
  if (is_leq(first) && is_leq(second)) {
    v.direction = Direction::up;
    v.details = "x0 <= F(x0,y0) and F(y0,x0) <= y0";
  } else if (is_leq(space.leq(t.first, z0.first)) && is_leq(space.leq(z0.second, t.second))) {
    v.direction = Direction::down;
    v.details = "F(x0,y0) <= x0 and y0 <= F(y0,x0)";
  } else if (v.details.empty()) {
    v.details = "neither x0 <= F(x0,y0), F(y0,x0) <= y0 nor the reverse pair holds";
  }
  v.admissible = v.direction != Direction::none;
  return v;
}

/// d₂(T(Z), Z); zero exactly at coupled fixed points.
template <class E, class D>
D residual(const CoupledOperator<E, D>& op, const PairPoint<E>& z) {
  return d2(product_T(op, z), z, op.base());
}

/// Picard iteration Z_{n+1} = T(Z_n).
///
/// Converged means Z_N is an exact fixed point, or all of η_N, the residual
/// and the bound residual/(1 − ρ) with ρ = residual/η_N are within tol.
/// With `require_admissible`, an inadmissible start throws and any increase
/// of η beyond rounding stops the run as a monotonicity violation.
template <class E, class D>
IterationTrace<E, D> solve(const CoupledOperator<E, D>& op, const PairPoint<E>& z0, const SolveOptions<D>& opts) {
  if (!(opts.tol > D(0))) throw InputError("solve: tol must be positive");
  if (opts.max_iter == 0) throw InputError("solve: max_iter must be positive");
  const std::size_t keep = std::max<std::size_t>(opts.keep_every, 1);
  const auto& space = op.base();

  IterationTrace<E, D> trace;
  trace.start = check_start(op, z0);
  if (opts.require_admissible && !trace.start.admissible)
    throw InputError("solve: inadmissible start (" + trace.start.details + ")");

  PairPoint<E> z = z0;
  PairPoint<E> prev = z0;
  PairPoint<E> next = product_T(op, z);
  D res = d2(next, z, space);
  std::size_t n = 0;
  trace.iterates.push_back(z);
  trace.iterate_index.push_back(0);

  const D stall_factor = from_double<D>(kStallFactor);
  auto converged = [&]() {
    if (res == D(0)) {
      trace.error_bound = D(0);
      return true;
    }
    if (n == 0) return false;
    const D& eta_n = trace.eta.back();
    if (!(res < eta_n)) {
      trace.error_bound.reset();
      return false;
    }
    // residual / (1 − res/η) = res·η / (η − res)
    trace.error_bound = D(res * eta_n / D(eta_n - res));
    return eta_n <= opts.tol && res <= opts.tol && *trace.error_bound <= opts.tol;
  };

  while (true) {
    if (converged()) {
      trace.termination = Termination::converged;
      break;
    }
    if (n == opts.max_iter) {
      trace.termination = Termination::max_iterations;
      break;
    }
    trace.eta.push_back(res);
    prev = z;
    z = next;
    ++n;
    if (n % keep == 0) {
      trace.iterates.push_back(z);
      trace.iterate_index.push_back(n);
    }
    next = product_T(op, z);
    res = d2(next, z, space);

    const auto& eta = trace.eta;
    const double scale = std::max({magnitude(z.first), magnitude(z.second), magnitude(prev.first),
                                   magnitude(prev.second)});
    if (opts.require_admissible && eta.size() >= 2 &&
        Tolerance<D>::exceeds(eta[eta.size() - 1], eta[eta.size() - 2], scale)) {
      trace.termination = Termination::monotonicity_violation;
      break;
    }
    if (eta.size() > kStallWindow && !(eta.back() < D(eta[eta.size() - 1 - kStallWindow] * stall_factor)) &&
        !converged()) {
      trace.termination = Termination::stalled;
      break;
    }
  }
  if (trace.iterate_index.back() != n) {
    trace.iterates.push_back(z);
    trace.iterate_index.push_back(n);
  }
  trace.iterations = n;
  trace.residual = res;
  if (trace.termination != Termination::converged) converged();  // refresh error_bound for the report
  return trace;
}

}  // namespace coupled_fp
