#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coupled_fp/kernels.hpp"
#include "coupled_fp/ordered_space.hpp"

namespace coupled_fp {

enum class ConditionId { banach_k, samet_mk, symmetric_mk, strict_contraction, mixed_monotone };

/// Verdicts are falsification-based: `holds_on_samples` means no violation was
/// found among the cases tried, never that the condition is proven.
enum class Verdict { holds_on_samples, fails, inconclusive };

/// How the tested cases were obtained.
enum class Basis { sampled, exhaustive };

std::string_view to_string(ConditionId id);
std::string_view to_string(Verdict v);
std::string_view to_string(Basis b);

/// Two comparable points of X² with `lower ≤₂ upper`, i.e. upper = (x, y),
/// lower = (u, v) with x ≥ u and y ≤ v.
template <class E>
struct Quadruple {
  PairPoint<E> upper;
  PairPoint<E> lower;

  const E& x() const { return upper.first; }
  const E& y() const { return upper.second; }
  const E& u() const { return lower.first; }
  const E& v() const { return lower.second; }
};

/// A concrete case refuting a condition, with the measured quantities.
/// `images` holds F(x,y), F(u,v) and, for the symmetric conditions, also
/// F(y,x), F(v,u).
template <class E, class D>
struct Witness {
  Quadruple<E> quad;
  std::optional<D> lhs;
  std::optional<D> rhs;
  std::vector<E> images;
  std::optional<D> epsilon;
  std::optional<D> delta;
};

template <class E, class D>
struct EpsilonEntry {
  D epsilon{};
  D delta{};
  std::size_t band_samples = 0;
  Verdict verdict = Verdict::inconclusive;
  std::optional<Witness<E, D>> witness;
};

template <class E, class D>
struct ConditionReport {
  ConditionId condition = ConditionId::mixed_monotone;
  Verdict verdict = Verdict::inconclusive;
  Basis basis = Basis::sampled;
  std::optional<Witness<E, D>> witness;
  std::vector<EpsilonEntry<E, D>> epsilon_grid;
  std::size_t samples_used = 0;
  std::size_t comparable_pairs_used = 0;
  std::optional<D> k;
  std::string note;
};

/// Options shared by every sampled check.
struct CheckOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  Execution execution = Execution::parallel;
};

/// Sampled runs need this many tested cases before a verdict other than
/// inconclusive is issued. Exhaustive runs need just one.
inline constexpr std::size_t kMinComparable = 10;

inline Verdict scan_verdict(const ScanResult& r, Basis basis) {
  const std::size_t needed = basis == Basis::exhaustive ? 1 : kMinComparable;
  if (r.violated()) return Verdict::fails;
  return r.evaluated < needed ? Verdict::inconclusive : Verdict::holds_on_samples;
}

}  // namespace coupled_fp
