#pragma once

// Generators for the comparable quadruples the checkers scan. Generation is
// sequential and seeded so every report is reproducible; only evaluation runs
// in parallel.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "coupled_fp/ordered_space.hpp"
#include "coupled_fp/report.hpp"

namespace coupled_fp {

template <class E>
struct QuadrupleBatch {
  std::vector<Quadruple<E>> items;
  std::size_t drawn = 0;  ///< candidates generated, including discarded ones
  Basis basis = Basis::sampled;
};

/// Finite spaces with at most this many quadruples are enumerated outright.
inline constexpr std::size_t kExhaustiveQuadrupleLimit = 2'000'000;

template <class E, class D>
bool enumerable(const SpaceModel<E, D>& space) {
  if (!space.is_finite()) return false;
  const std::size_t n = space.elements->size();
  return n * n * n * n <= kExhaustiveQuadrupleLimit;
}

namespace detail {

/// Orders two elements as (low, high), or nullopt if incomparable.
template <class E, class D>
std::optional<std::pair<E, E>> sort_pair(const SpaceModel<E, D>& space, const E& a, const E& b) {
  switch (space.leq(a, b)) {
    case Ordering::less_equal: return std::pair{a, b};
    case Ordering::greater: return std::pair{b, a};
    case Ordering::incomparable: break;
  }
  return std::nullopt;
}

}  // namespace detail

/// Every (x, y, u, v) with u ≤ x and y ≤ v. For sampled spaces, a third of the
/// draws pin x = u and another third pin y = v.
template <class E, class D>
QuadrupleBatch<E> comparable_quadruples(const SpaceModel<E, D>& space, std::size_t samples,
                                        std::uint64_t seed) {
  QuadrupleBatch<E> batch;
  if (enumerable(space)) {
    batch.basis = Basis::exhaustive;
    const auto& el = *space.elements;
    for (const E& x : el)
      for (const E& y : el)
        for (const E& u : el)
          for (const E& v : el) {
            ++batch.drawn;
            if (is_leq(space.leq(u, x)) && is_leq(space.leq(y, v))) batch.items.push_back({{x, y}, {u, v}});
          }
    return batch;
  }

  const auto pool = space.sampler(4 * samples, seed);
  batch.items.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const E& a = pool[4 * i];
    const E& b = (i % 3 == 1) ? a : pool[4 * i + 1];
    const E& c = pool[4 * i + 2];
    const E& d = (i % 3 == 2) ? c : pool[4 * i + 3];
    ++batch.drawn;
    const auto first = detail::sort_pair(space, a, b);
    const auto second = detail::sort_pair(space, c, d);
    if (!first || !second) continue;
    batch.items.push_back({{first->second, second->first}, {first->first, second->second}});
  }
  return batch;
}

/// Quadruples covering both clauses of mixed monotonicity. Each comparable
/// pair a ≤ b with a third element c contributes (upper, lower) =
/// ((b, c), (a, c)) and ((c, a), (c, b)); mixed monotonicity is then
/// F(lower) ≤ F(upper) on every item. `pairs` counts the comparable (a, b).
template <class E>
struct MonotoneBatch {
  QuadrupleBatch<E> quads;
  std::size_t pairs = 0;
};

template <class E, class D>
MonotoneBatch<E> monotone_quadruples(const SpaceModel<E, D>& space, std::size_t samples,
                                     std::uint64_t seed) {
  MonotoneBatch<E> out;
  auto push = [&](const E& lo, const E& hi, const E& c) {
    out.quads.items.push_back({{hi, c}, {lo, c}});
    out.quads.items.push_back({{c, lo}, {c, hi}});
  };
  if (space.is_finite() && space.elements->size() <= 200) {
    out.quads.basis = Basis::exhaustive;
    const auto& el = *space.elements;
    for (const E& a : el)
      for (const E& b : el) {
        ++out.quads.drawn;
        if (!is_leq(space.leq(a, b))) continue;
        ++out.pairs;
        for (const E& c : el) push(a, b, c);
      }
    return out;
  }

  const auto pool = space.sampler(3 * samples, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    ++out.quads.drawn;
    const auto sorted = detail::sort_pair(space, pool[3 * i], pool[3 * i + 1]);
    if (!sorted) continue;
    ++out.pairs;
    push(sorted->first, sorted->second, pool[3 * i + 2]);
  }
  return out;
}

/// Comparable quadruples whose d₂ lies in the band [eps, eps + delta).
///
/// Finite spaces are enumerated. Spaces with a `step` hook get targeted
/// construction: pick a base (u, y), a d₂ value h in the band and a split of 2h
/// between the two coordinates, then move x above u and v above y. The first
/// quarter of the draws uses x = u, the second quarter y = v, the rest random
/// splits. Draws continue until `target` quadruples are in the band (or 4×
/// target attempts). Other spaces fall back to filtering random comparable
/// quadruples.
template <class E, class D>
QuadrupleBatch<E> band_quadruples(const SpaceModel<E, D>& space, const D& eps, const D& delta,
                                  std::size_t target, std::uint64_t seed) {
  auto in_band = [&](const Quadruple<E>& q) {
    return Tolerance<D>::in_band(d2(q.upper, q.lower, space), eps, delta);
  };

  if (enumerable(space) || !space.step) {
    auto batch = comparable_quadruples(space, enumerable(space) ? 0 : target, seed);
    std::erase_if(batch.items, [&](const Quadruple<E>& q) { return !in_band(q); });
    return batch;
  }

  QuadrupleBatch<E> batch;
  const std::size_t max_attempts = 4 * target;
  const auto bases = space.sampler(2 * max_attempts, seed);
  std::mt19937_64 rng(derive_seed(seed, 0xba4d));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Keep constructed d₂ values clear of the open upper edge by more than the slack.
  const double shrink = Tolerance<D>::exact ? 1.0 : 1.0 - 4e-12;

  const std::size_t slice = std::max<std::size_t>(target / 4, 1);
  batch.items.reserve(target);
  for (std::size_t i = 0; i < max_attempts && batch.items.size() < target; ++i) {
    const std::size_t accepted = batch.items.size();
    const int mode = accepted < slice ? 0 : accepted < 2 * slice ? 1 : 2;
    const bool slice_start = accepted == 0 || accepted == slice;
    const double t = slice_start ? 0.0 : unit(rng) * shrink;
    const D h = eps + D(delta * from_double<D>(t));
    const D two_h = h + h;
    D p{0};
    D q{0};
    if (mode == 0) {
      q = two_h;
    } else if (mode == 1) {
      p = two_h;
    } else {
      p = D(two_h * from_double<D>(unit(rng)));
      q = two_h - p;
    }
    const E& u = bases[2 * i];
    const E& y = bases[2 * i + 1];
    Quadruple<E> cand{{mode == 0 ? u : space.step(u, p, true), y}, {u, mode == 1 ? y : space.step(y, q, true)}};
    ++batch.drawn;
    if (!is_leq(space.leq(cand.u(), cand.x())) || !is_leq(space.leq(cand.y(), cand.v()))) continue;
    if (!in_band(cand)) continue;
    batch.items.push_back(cand);
  }
  return batch;
}

}  // namespace coupled_fp
