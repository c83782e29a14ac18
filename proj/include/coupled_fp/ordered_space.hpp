#pragma once

// Metric spaces with a partial order, and the product space (X², d₂, ≤₂)
// built on top of them.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coupled_fp/scalar.hpp"

namespace coupled_fp {

/// Three-valued answer of an order query `leq(a, b)`.
enum class Ordering {
  less_equal,    ///< a ≤ b
  greater,       ///< b < a
  incomparable,
};

inline bool is_leq(Ordering o) { return o == Ordering::less_equal; }

/// A metric space carrying a partial order.
///
/// `distance`, `leq`, `sampler` and `description` are required. The remaining
/// hooks are optional and unlock better strategies in the checkers:
///  - `elements` enumerates a finite space so audits and checks go exhaustive,
///  - `step(e, r, up)` returns an element at distance `r` above (or below) `e`,
///    which lets band searches construct quadruples with a prescribed d₂,
///  - `contains` guards against out-of-domain elements,
///  - `label` renders an element for CSV and reports.
///
/// All callables must be pure; they are invoked concurrently.
template <class E, class D>
struct SpaceModel {
  std::function<D(const E&, const E&)> distance;
  std::function<Ordering(const E&, const E&)> leq;
  std::function<std::vector<E>(std::size_t count, std::uint64_t seed)> sampler;
  std::string description;

  std::optional<std::vector<E>> elements;
  std::function<E(const E&, const D&, bool up)> step;
  std::function<bool(const E&)> contains;
  std::function<std::string(const E&)> label;

  bool in_domain(const E& e) const { return !contains || contains(e); }
  bool is_finite() const { return elements.has_value(); }
};

/// Z = (first, second) in X².
template <class E>
struct PairPoint {
  E first{};
  E second{};

  bool operator==(const PairPoint&) const = default;
};

namespace detail {

template <class E, class D>
void require_domain(const SpaceModel<E, D>& space, std::initializer_list<const E*> items,
                    const char* where) {
  for (const E* e : items) {
    if (!space.in_domain(*e)) {
      throw InputError(std::string(where) + ": element outside the domain of '" +
                       space.description + "'");
    }
  }
}

}  // namespace detail

/// d₂(Y, V) = ½ [d(Y.first, V.first) + d(Y.second, V.second)].
template <class E, class D>
D d2(const PairPoint<E>& y, const PairPoint<E>& v, const SpaceModel<E, D>& space) {
  detail::require_domain(space, {&y.first, &y.second, &v.first, &v.second}, "d2");
  return half(D(space.distance(y.first, v.first) + space.distance(y.second, v.second)));
}

/// Product order: `a ≤₂ b` iff a.first ≤ b.first and b.second ≤ a.second.
/// Returns less_equal for a ≤₂ b, greater for b <₂ a, incomparable otherwise.
template <class E, class D>
Ordering product_leq(const PairPoint<E>& a, const PairPoint<E>& b, const SpaceModel<E, D>& space) {
  detail::require_domain(space, {&a.first, &a.second, &b.first, &b.second}, "product_leq");
  const bool a_below = is_leq(space.leq(a.first, b.first)) && is_leq(space.leq(b.second, a.second));
  if (a_below) return Ordering::less_equal;
  const bool b_below = is_leq(space.leq(b.first, a.first)) && is_leq(space.leq(a.second, b.second));
  return b_below ? Ordering::greater : Ordering::incomparable;
}

template <class E, class D>
bool comparable(const PairPoint<E>& a, const PairPoint<E>& b, const SpaceModel<E, D>& space) {
  return product_leq(a, b, space) != Ordering::incomparable;
}

/// Derives an independent stream seed from a base seed and a stream id.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

// ---------------------------------------------------------------------------
// Axiom audit

template <class E>
struct AxiomResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<E> witness;  ///< first counterexample, in the order named by `detail`
  std::string detail;
};

template <class E>
struct AuditReport {
  std::string space;
  bool exhaustive = false;
  std::vector<AxiomResult<E>> axioms;

  bool all_passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const auto& a) { return a.passed; });
  }
  const AxiomResult<E>& axiom(std::string_view name) const {
    for (const auto& a : axioms) {
      if (a.name == name) return a;
    }
    throw std::out_of_range("no axiom named " + std::string(name));
  }
};

/// Checks the metric and partial-order axioms on sampled points, or on every
/// point/pair/triple when the space is finite and small enough.
/// `tau_metric` is the absolute slack for identity, symmetry and the triangle
/// inequality.
template <class E, class D>
AuditReport<E> audit_space(const SpaceModel<E, D>& space, std::size_t samples, std::uint64_t seed,
                           double tau_metric = 1e-12) {
  if (samples < 3) throw InputError("audit_space needs at least 3 samples");
  if (tau_metric <= 0) throw InputError("tau_metric must be positive");

  constexpr std::size_t kExhaustiveLimit = 128;  // n³ triples stays cheap
  AuditReport<E> report;
  report.space = space.description;

  std::vector<E> points;
  std::vector<std::array<std::size_t, 3>> triples;
  const bool exhaustive = space.is_finite() && space.elements->size() <= kExhaustiveLimit;
  if (exhaustive) {
    points = *space.elements;
    const std::size_t n = points.size();
    triples.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) triples.push_back({i, j, k});
  } else {
    points = space.sampler(samples, seed);
    if (points.size() < 3) throw InputError("sampler returned fewer than 3 points");
    std::mt19937_64 rng(derive_seed(seed, 1));
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    triples.reserve(samples);
    for (std::size_t t = 0; t < samples; ++t) triples.push_back({pick(rng), pick(rng), pick(rng)});
    // Keep some triples with repeated entries so antisymmetry gets exercised.
    for (std::size_t i = 0; i + 1 < points.size() && i < samples / 4; ++i)
      triples.push_back({i, i, i + 1});
  }
  report.exhaustive = exhaustive;

  const D tau = from_double<D>(tau_metric);
  auto abs_diff = [](const D& a, const D& b) { return a > b ? D(a - b) : D(b - a); };

  auto named = [](const char* name) {
    AxiomResult<E> r;
    r.name = name;
    return r;
  };
  AxiomResult<E> nonneg = named("non_negativity"), identity = named("identity"), symmetry = named("symmetry"),
                 triangle = named("triangle_inequality"), reflexive = named("reflexivity"),
                 antisym = named("antisymmetry"), transitive = named("transitivity");

  auto fail = [](AxiomResult<E>& r, std::vector<E> w, std::string detail) {
    if (r.passed) {
      r.passed = false;
      r.witness = std::move(w);
      r.detail = std::move(detail);
    }
  };

  for (const E& x : points) {
    ++identity.checked;
    if (abs_diff(space.distance(x, x), D(0)) > tau) fail(identity, {x}, "d(x,x) != 0");
    ++reflexive.checked;
    if (!is_leq(space.leq(x, x))) fail(reflexive, {x}, "x <= x does not hold");
  }

  auto pair_checks = [&](const E& x, const E& y) {
    const D dxy = space.distance(x, y);
    const D dyx = space.distance(y, x);
    ++nonneg.checked;
    if (dxy < D(0)) fail(nonneg, {x, y}, "d(x,y) < 0");
    ++symmetry.checked;
    if (abs_diff(dxy, dyx) > tau) fail(symmetry, {x, y}, "d(x,y) != d(y,x)");
    ++antisym.checked;
    if (is_leq(space.leq(x, y)) && is_leq(space.leq(y, x)) && !(x == y))
      fail(antisym, {x, y}, "x <= y and y <= x but x != y");
  };

  for (const auto& [i, j, k] : triples) {
    const E& x = points[i];
    const E& y = points[j];
    const E& z = points[k];
    if (exhaustive) {
      if (k == 0) pair_checks(x, y);
    } else {
      pair_checks(x, y);
    }
    ++triangle.checked;
    if (space.distance(x, z) > space.distance(x, y) + space.distance(y, z) + tau)
      fail(triangle, {x, y, z}, "d(x,z) > d(x,y) + d(y,z) for witness (x, y, z)");
    ++transitive.checked;
    if (is_leq(space.leq(x, y)) && is_leq(space.leq(y, z)) && !is_leq(space.leq(x, z)))
      fail(transitive, {x, y, z}, "x <= y <= z but not x <= z");
  }

  report.axioms = {nonneg, identity, symmetry, triangle, reflexive, antisym, transitive};
  return report;
}

// ---------------------------------------------------------------------------
// Stock spaces

/// ℝ with |x − y| and the usual order; samples uniformly from [−radius, radius].
SpaceModel<double, double> real_line(double radius = 10.0);

}  // namespace coupled_fp
