#pragma once

// Empirical classification of a coupled operator against the contractive
// regimes
//
//   Banach-k  ⊂  Meir-Keeler (one-sided)  ⊂  symmetric Meir-Keeler
//
// plus the strict contraction of T on comparable pairs. Every check is a
// falsification search: it returns a reproducible witness or reports that
// none was found.

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "coupled_fp/kernels.hpp"
#include "coupled_fp/operator.hpp"
#include "coupled_fp/report.hpp"
#include "coupled_fp/sampling.hpp"

namespace coupled_fp {

/// δ(ε) candidate for the Meir-Keeler checks.
template <class D>
using DeltaRule = std::function<D(const D&)>;

/// Measured sides of one inequality.
template <class D>
struct Evaluation {
  Outcome outcome = Outcome::skipped;
  D lhs{};
  D rhs{};
};

/// δ(ε) = (1/k − 1)·ε, the band width under which a Banach constant k gives
/// the Meir-Keeler conclusion. k = 0 returns nullopt: every δ works.
template <class D>
std::optional<D> delta_from_k(const D& k, const D& eps) {
  if (k < D(0) || k >= D(1)) throw InputError("delta_from_k: k must lie in [0, 1)");
  if (!(eps > D(0))) throw InputError("delta_from_k: epsilon must be positive");
  if (k == D(0)) return std::nullopt;
  return D((D(1) / k - D(1)) * eps);
}

/// d(F(x,y), F(u,v)).
template <class E, class D>
D one_sided_conclusion(const CoupledOperator<E, D>& op, const Quadruple<E>& q) {
  return op.base().distance(op(q.x(), q.y()), op(q.u(), q.v()));
}

/// ½ [d(F(x,y), F(u,v)) + d(F(y,x), F(v,u))], written coordinatewise.
template <class E, class D>
D symmetric_conclusion(const CoupledOperator<E, D>& op, const Quadruple<E>& q) {
  const auto& d = op.base().distance;
  return half(D(d(op(q.x(), q.y()), op(q.u(), q.v())) + d(op(q.y(), q.x()), op(q.v(), q.u()))));
}

/// The same quantity through the product space: d₂(T(x,y), T(u,v)).
template <class E, class D>
D product_conclusion(const CoupledOperator<E, D>& op, const Quadruple<E>& q) {
  return d2(product_T(op, q.upper), product_T(op, q.lower), op.base());
}

namespace detail {

template <class E, class D>
Evaluation<D> evaluate_banach(const CoupledOperator<E, D>& op, const Quadruple<E>& q, const D& k) {
  Evaluation<D> e;
  e.lhs = one_sided_conclusion(op, q);
  e.rhs = k * d2(q.upper, q.lower, op.base());
  const E fxy = op(q.x(), q.y());
  const E fuv = op(q.u(), q.v());
  const double scale = std::max({magnitude(q.x()), magnitude(q.y()), magnitude(q.u()), magnitude(q.v()),
                                 magnitude(fxy), magnitude(fuv)});
  e.outcome = Tolerance<D>::exceeds(e.lhs, e.rhs, scale) ? Outcome::violated : Outcome::satisfied;
  return e;
}

template <class E, class D>
Evaluation<D> evaluate_band(const CoupledOperator<E, D>& op, ConditionId id, const Quadruple<E>& q,
                            const D& eps, const D& delta) {
  Evaluation<D> e;
  if (!Tolerance<D>::in_band(d2(q.upper, q.lower, op.base()), eps, delta)) return e;
  e.lhs = id == ConditionId::samet_mk ? one_sided_conclusion(op, q) : symmetric_conclusion(op, q);
  e.rhs = eps;
  e.outcome = Tolerance<D>::violates_strict(e.lhs, e.rhs) ? Outcome::violated : Outcome::satisfied;
  return e;
}

template <class E, class D>
Evaluation<D> evaluate_strict(const CoupledOperator<E, D>& op, const Quadruple<E>& q) {
  Evaluation<D> e;
  e.rhs = d2(q.upper, q.lower, op.base());
  if (e.rhs == D(0)) return e;
  e.lhs = product_conclusion(op, q);
  e.outcome = Tolerance<D>::violates_strict(e.lhs, e.rhs) ? Outcome::violated : Outcome::satisfied;
  return e;
}

template <class E, class D>
std::vector<E> images(const CoupledOperator<E, D>& op, const Quadruple<E>& q, bool symmetric) {
  std::vector<E> out{op(q.x(), q.y()), op(q.u(), q.v())};
  if (symmetric) {
    out.push_back(op(q.y(), q.x()));
    out.push_back(op(q.v(), q.u()));
  }
  return out;
}

template <class E, class D>
Witness<E, D> make_witness(const CoupledOperator<E, D>& op, const Quadruple<E>& q, const Evaluation<D>& e,
                           bool symmetric) {
  return Witness<E, D>{q, e.lhs, e.rhs, images(op, q, symmetric), std::nullopt, std::nullopt};
}

}  // namespace detail

/// d(F(x,y), F(u,v)) ≤ (k/2)[d(x,u) + d(y,v)] for all x ≥ u, y ≤ v.
template <class E, class D>
ConditionReport<E, D> check_banach_k(const CoupledOperator<E, D>& op, const D& k, const CheckOptions& opts = {}) {
  if (k < D(0) || k >= D(1)) throw InputError("check_banach_k: k must lie in [0, 1)");
  const auto batch = comparable_quadruples(op.base(), opts.samples, opts.seed);
  const auto& items = batch.items;
  const auto result = scan(opts.execution, std::span<const Quadruple<E>>(items), [&](const Quadruple<E>& q) {
    return detail::evaluate_banach(op, q, k).outcome;
  });

  ConditionReport<E, D> report;
  report.condition = ConditionId::banach_k;
  report.basis = batch.basis;
  report.k = k;
  report.samples_used = batch.drawn;
  report.comparable_pairs_used = result.evaluated;
  report.verdict = scan_verdict(result, batch.basis);
  if (result.violated()) {
    const auto& q = items[result.first_violation];
    report.witness = detail::make_witness(op, q, detail::evaluate_banach(op, q, k), false);
  }
  return report;
}

namespace detail {

template <class E, class D>
ConditionReport<E, D> band_check(const CoupledOperator<E, D>& op, ConditionId id, std::span<const D> eps_grid,
                                 const DeltaRule<D>& delta_rule, const CheckOptions& opts) {
  if (eps_grid.empty()) throw InputError("epsilon grid must not be empty");
  ConditionReport<E, D> report;
  report.condition = id;
  report.basis = enumerable(op.base()) ? Basis::exhaustive : Basis::sampled;

  bool any_band = false;
  bool any_failure = false;
  for (std::size_t j = 0; j < eps_grid.size(); ++j) {
    const D& eps = eps_grid[j];
    if (!(eps > D(0))) throw InputError("epsilon values must be positive");
    const D delta = delta_rule(eps);
    if (!(delta > D(0))) throw InputError("delta(epsilon) must be positive");

    const auto batch = band_quadruples(op.base(), eps, delta, opts.samples, derive_seed(opts.seed, j));
    const auto& items = batch.items;
    const auto result = scan(opts.execution, std::span<const Quadruple<E>>(items), [&](const Quadruple<E>& q) {
      return evaluate_band(op, id, q, eps, delta).outcome;
    });

    EpsilonEntry<E, D> entry;
    entry.epsilon = eps;
    entry.delta = delta;
    entry.band_samples = result.evaluated;
    if (result.violated()) {
      const auto& q = items[result.first_violation];
      auto w = make_witness(op, q, evaluate_band(op, id, q, eps, delta), id == ConditionId::symmetric_mk);
      w.epsilon = eps;
      w.delta = delta;
      entry.witness = w;
      entry.verdict = Verdict::fails;
      if (!report.witness) report.witness = w;
      any_failure = true;
    } else {
      entry.verdict = result.evaluated > 0 ? Verdict::holds_on_samples : Verdict::inconclusive;
    }
    any_band = any_band || result.evaluated > 0;
    report.samples_used += batch.drawn;
    report.comparable_pairs_used += result.evaluated;
    report.epsilon_grid.push_back(std::move(entry));
  }
  report.verdict = any_failure ? Verdict::fails : any_band ? Verdict::holds_on_samples : Verdict::inconclusive;
  return report;
}

}  // namespace detail

/// One-sided generalized Meir-Keeler condition: for x ≥ u, y ≤ v,
/// ε ≤ ½[d(x,u) + d(y,v)] < ε + δ(ε)  ⇒  d(F(x,y), F(u,v)) < ε.
/// The degenerate slices x = u and y = v are searched before random directions.
template <class E, class D>
ConditionReport<E, D> check_samet(const CoupledOperator<E, D>& op, std::span<const D> eps_grid,
                                  const DeltaRule<D>& delta_rule, const CheckOptions& opts = {}) {
  return detail::band_check(op, ConditionId::samet_mk, eps_grid, delta_rule, opts);
}

/// Symmetric generalized Meir-Keeler condition: same band, conclusion
/// ½[d(F(x,y), F(u,v)) + d(F(y,x), F(v,u))] < ε, i.e. d₂(T(Y), T(V)) < ε.
template <class E, class D>
ConditionReport<E, D> check_symmetric_mk(const CoupledOperator<E, D>& op, std::span<const D> eps_grid,
                                         const DeltaRule<D>& delta_rule, const CheckOptions& opts = {}) {
  return detail::band_check(op, ConditionId::symmetric_mk, eps_grid, delta_rule, opts);
}

/// d₂(T(Y), T(V)) < d₂(Y, V) for comparable Y ≠ V.
template <class E, class D>
ConditionReport<E, D> check_strict_contraction(const CoupledOperator<E, D>& op, const CheckOptions& opts = {}) {
  if (opts.samples < 2) throw InputError("check_strict_contraction needs at least 2 samples");
  const auto batch = comparable_quadruples(op.base(), opts.samples, opts.seed);
  const auto& items = batch.items;
  const auto result = scan(opts.execution, std::span<const Quadruple<E>>(items),
                           [&](const Quadruple<E>& q) { return detail::evaluate_strict(op, q).outcome; });

  ConditionReport<E, D> report;
  report.condition = ConditionId::strict_contraction;
  report.basis = batch.basis;
  report.samples_used = batch.drawn;
  report.comparable_pairs_used = result.evaluated;
  report.verdict = scan_verdict(result, batch.basis);
  if (result.violated()) {
    const auto& q = items[result.first_violation];
    report.witness = detail::make_witness(op, q, detail::evaluate_strict(op, q), true);
  }
  return report;
}

/// Re-evaluates the stored witness of a failed report. True iff it still
/// violates the condition.
template <class E, class D>
bool witness_reproduces(const CoupledOperator<E, D>& op, const ConditionReport<E, D>& report) {
  if (!report.witness) return false;
  const auto& w = *report.witness;
  switch (report.condition) {
    case ConditionId::banach_k:
      return report.k && detail::evaluate_banach(op, w.quad, *report.k).outcome == Outcome::violated;
    case ConditionId::samet_mk:
    case ConditionId::symmetric_mk:
      return w.epsilon && w.delta &&
             detail::evaluate_band(op, report.condition, w.quad, *w.epsilon, *w.delta).outcome ==
                 Outcome::violated;
    case ConditionId::strict_contraction:
      return detail::evaluate_strict(op, w.quad).outcome == Outcome::violated;
    case ConditionId::mixed_monotone:
      return detail::monotone_outcome(op, w.quad) == Outcome::violated;
  }
  return false;
}

// ---------------------------------------------------------------------------
// δ(ε) curve

template <class D>
struct DeltaEstimate {
  D epsilon{};
  D delta_max{};  ///< 0 when the condition already fails at δ → 0⁺
  std::size_t probes = 0;
};

/// Largest δ ∈ (0, cap_factor·ε] for which no violation of the symmetric
/// condition was found in [ε, ε + δ).
///
/// Finite spaces are solved exactly: δ_max is the smallest d₂ − ε over all
/// violating comparable quadruples (capped). Other spaces bisect over δ with a
/// fresh targeted sample per probe.
template <class E, class D>
std::vector<DeltaEstimate<D>> estimate_delta_curve(const CoupledOperator<E, D>& op, std::span<const D> eps_grid,
                                                   const CheckOptions& opts = {}, double cap_factor = 10.0) {
  constexpr int kBisections = 48;
  std::vector<DeltaEstimate<D>> out;
  const auto& space = op.base();

  for (std::size_t j = 0; j < eps_grid.size(); ++j) {
    const D& eps = eps_grid[j];
    if (!(eps > D(0))) throw InputError("epsilon values must be positive");
    const D cap = D(eps * from_double<D>(cap_factor));
    DeltaEstimate<D> est{eps, cap, 0};

    if (enumerable(space)) {
      const auto batch = comparable_quadruples(space, 0, opts.seed);
      for (const auto& q : batch.items) {
        const auto e = detail::evaluate_band(op, ConditionId::symmetric_mk, q, eps, cap);
        if (e.outcome != Outcome::violated) continue;
        const D gap = d2(q.upper, q.lower, space) - eps;
        if (gap < est.delta_max) est.delta_max = gap;
      }
      est.probes = 1;
      out.push_back(est);
      continue;
    }

    auto violated = [&](const D& delta) {
      const auto batch = band_quadruples(space, eps, delta, opts.samples, derive_seed(opts.seed, 7919 * j + est.probes));
      ++est.probes;
      const auto r = scan(opts.execution, std::span<const Quadruple<E>>(batch.items), [&](const Quadruple<E>& q) {
        return detail::evaluate_band(op, ConditionId::symmetric_mk, q, eps, delta).outcome;
      });
      return r.violated();
    };

    if (!violated(cap)) {
      out.push_back(est);
      continue;
    }
    D lo = D(eps * from_double<D>(1e-9));
    if (violated(lo)) {
      est.delta_max = D(0);
      out.push_back(est);
      continue;
    }
    D hi = cap;
    for (int it = 0; it < kBisections; ++it) {
      const D mid = half(D(lo + hi));
      if (violated(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    est.delta_max = lo;
    out.push_back(est);
  }
  return out;
}

}  // namespace coupled_fp
