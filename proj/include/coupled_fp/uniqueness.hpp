#pragma once

// Empirical probes for uniqueness of the coupled fixed point and for the
// diagonal property x̄ = ȳ. Uniqueness can only be refuted here (two distinct
// converged endpoints) or supported; nothing in this header proves it.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "coupled_fp/kernels.hpp"
#include "coupled_fp/solver.hpp"

namespace coupled_fp {

/// Returns a pair comparable to both arguments, if it can find one.
template <class E>
using BoundSearch = std::function<std::optional<PairPoint<E>>(const PairPoint<E>&, const PairPoint<E>&)>;

/// Upper bound (max, min) for totally ordered base spaces.
template <class E, class D>
BoundSearch<E> coordinatewise_bound(std::shared_ptr<const SpaceModel<E, D>> space) {
  return [space](const PairPoint<E>& a, const PairPoint<E>& b) -> std::optional<PairPoint<E>> {
    const auto first = space->leq(a.first, b.first);
    const auto second = space->leq(a.second, b.second);
    if (first == Ordering::incomparable || second == Ordering::incomparable) return std::nullopt;
    return PairPoint<E>{is_leq(first) ? b.first : a.first, is_leq(second) ? a.second : b.second};
  };
}

/// Tries every Z ∈ X² of a finite space.
template <class E, class D>
BoundSearch<E> exhaustive_bound(std::shared_ptr<const SpaceModel<E, D>> space) {
  return [space](const PairPoint<E>& a, const PairPoint<E>& b) -> std::optional<PairPoint<E>> {
    for (const E& z1 : *space->elements)
      for (const E& z2 : *space->elements) {
        const PairPoint<E> z{z1, z2};
        if (comparable(z, a, *space) && comparable(z, b, *space)) return z;
      }
    return std::nullopt;
  };
}

struct ComparabilityProbe {
  double rate = 0.0;
  std::size_t pairs = 0;
  std::size_t bounded = 0;
  Basis basis = Basis::sampled;
};

/// Fraction of pairs Y ≠ V in X² for which some Z ∈ X² is comparable to both.
/// Without `bound_search` only Y, V themselves are tried (Z = Y).
/// Finite spaces with at most 10⁶ ordered pairs are enumerated.
template <class E, class D>
ComparabilityProbe probe_comparability(const SpaceModel<E, D>& space, std::size_t samples, std::uint64_t seed,
                                       const BoundSearch<E>& bound_search = {},
                                       Execution exec = Execution::parallel) {
  std::vector<std::pair<PairPoint<E>, PairPoint<E>>> cases;
  ComparabilityProbe probe;
  if (enumerable(space)) {
    probe.basis = Basis::exhaustive;
    const auto& el = *space.elements;
    for (const E& a : el)
      for (const E& b : el)
        for (const E& c : el)
          for (const E& d : el) {
            PairPoint<E> y{a, b}, v{c, d};
            if (!(y == v)) cases.emplace_back(y, v);
          }
  } else {
    const auto pool = space.sampler(4 * samples, seed);
    for (std::size_t i = 0; i < samples; ++i) {
      PairPoint<E> y{pool[4 * i], pool[4 * i + 1]}, v{pool[4 * i + 2], pool[4 * i + 3]};
      if (!(y == v)) cases.emplace_back(y, v);
    }
  }

  const auto result = scan(exec, std::span<const std::pair<PairPoint<E>, PairPoint<E>>>(cases), [&](const auto& c) {
    const auto& [y, v] = c;
    bool ok = comparable(y, v, space);
    if (!ok && bound_search) {
      const auto z = bound_search(y, v);
      ok = z && comparable(*z, y, space) && comparable(*z, v, space);
    }
    // unbounded pairs are reported as skipped, so `evaluated` counts the bounded ones
    return ok ? Outcome::satisfied : Outcome::skipped;
  });
  probe.pairs = cases.size();
  probe.bounded = result.evaluated;
  probe.rate = cases.empty() ? 0.0 : static_cast<double>(probe.bounded) / static_cast<double>(probe.pairs);
  return probe;
}

struct DiagonalCheck {
  bool on_diagonal = false;
  double gap = 0.0;        ///< d(x̄, ȳ)
  double fixed_gap = 0.0;  ///< d(F(x̄, x̄), x̄)
};

/// Whether the endpoint satisfies x̄ = ȳ within 2·tol, and how far x̄ is from
/// being a fixed point of x ↦ F(x, x).
template <class E, class D>
DiagonalCheck check_diagonal(const CoupledOperator<E, D>& op, const PairPoint<E>& endpoint, const D& tol) {
  const auto& space = op.base();
  const D gap = space.distance(endpoint.first, endpoint.second);
  const E& xbar = endpoint.first;
  DiagonalCheck c;
  c.gap = as_double(gap);
  c.fixed_gap = as_double(space.distance(op(xbar, xbar), xbar));
  c.on_diagonal = gap <= D(tol + tol);
  return c;
}

template <class E, class D>
struct UniquenessReport {
  std::vector<PairPoint<E>> starts;
  std::vector<PairPoint<E>> endpoints;    ///< converged runs only
  std::vector<std::size_t> endpoint_start;
  std::vector<std::size_t> not_converged; ///< start indices whose solve did not converge
  std::vector<std::string> failures;      ///< reason per entry of not_converged
  D max_pairwise_d2{};
  std::vector<DiagonalCheck> diagonal;    ///< one per endpoint
  std::optional<ComparabilityProbe> comparability;
  D tol{};

  /// Consistent with a unique coupled fixed point at this tolerance.
  bool consistent_with_uniqueness() const { return max_pairwise_d2 <= D(tol + tol); }
};

/// Solves from every start (concurrently) and compares the endpoints.
template <class E, class D>
UniquenessReport<E, D> multi_start_uniqueness(const CoupledOperator<E, D>& op, const std::vector<PairPoint<E>>& starts,
                                              const SolveOptions<D>& opts) {
  UniquenessReport<E, D> report;
  report.starts = starts;
  report.tol = opts.tol;

  std::vector<std::optional<IterationTrace<E, D>>> traces(starts.size());
  std::vector<std::string> errors(starts.size());
  const auto n = static_cast<std::int64_t>(starts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      traces[i] = solve(op, starts[i], opts);
    } catch (const InputError& e) {
      errors[i] = e.what();
    }
  }

  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (traces[i] && traces[i]->termination == Termination::converged) {
      report.endpoints.push_back(traces[i]->endpoint());
      report.endpoint_start.push_back(i);
    } else {
      report.not_converged.push_back(i);
      report.failures.push_back(traces[i] ? std::string(to_string(traces[i]->termination)) : errors[i]);
    }
  }
  const auto& space = op.base();
  for (std::size_t i = 0; i < report.endpoints.size(); ++i) {
    for (std::size_t j = i + 1; j < report.endpoints.size(); ++j)
      report.max_pairwise_d2 = std::max(report.max_pairwise_d2, d2(report.endpoints[i], report.endpoints[j], space));
    report.diagonal.push_back(check_diagonal(op, report.endpoints[i], opts.tol));
  }
  return report;
}

}  // namespace coupled_fp
