#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "coupled_fp/conditions.hpp"
#include "coupled_fp/finite_space.hpp"
#include "coupled_fp/operator.hpp"
#include "coupled_fp/solver.hpp"
#include "coupled_fp/uniqueness.hpp"

namespace coupled_fp {

/// A space, an operator on it and the data needed to run every command.
template <class E, class D>
struct ProblemInstance {
  std::string name;
  std::shared_ptr<const SpaceModel<E, D>> space;
  CoupledOperator<E, D> op;
  PairPoint<E> default_start;
  std::optional<PairPoint<E>> expected_fixed_point;
  BoundSearch<E> bound_search;
  /// δ(ε) used by `verify` for both Meir-Keeler checks.
  DeltaRule<D> delta_rule;
  std::string delta_description;
};

using RealProblem = ProblemInstance<double, double>;
using FiniteProblem = ProblemInstance<Index, Rational>;
using AnyProblem = std::variant<RealProblem, FiniteProblem>;

/// Current version of the finite-problem file format and of every JSON output.
inline constexpr int kSchemaVersion = 1;

/// F(x,y) = (x − 3y)/5 on ℝ, start (−3, 3), fixed point (0, 0), δ(ε) = ε/8.
RealProblem samet_example(double radius = 10.0);

/// F(x,y) = (a·x − b·y)/c with a, b ≥ 0, c > 0. Lipschitz data (a/c, b/c).
/// δ(ε) = (c/(a+b) − 1)·ε when a + b < c, otherwise ε/8.
RealProblem linear_problem(double a, double b, double c, double radius = 10.0);

/// F(x,y) = 1 + (atan x − atan y)/4 on ℝ, fixed point (1, 1), δ(ε) = ε.
RealProblem arctan_example(double radius = 10.0);

/// Finite problem from the JSON schema
/// `{"schema_version": 1, "elements", "distance", "leq", "F", ...}`.
FiniteProblem finite_problem_from_json(const nlohmann::json& doc, std::string name);
FiniteProblem load_finite(const std::filesystem::path& path);

/// Names accepted by `builtin`, as shown in error messages.
std::vector<std::string> registry_names();

/// Resolves "samet_example", "arctan_example", "linear(a,b,c)",
/// "finite_poset(path)" or a path to a .json file.
AnyProblem builtin(const std::string& name);

/// Up to `count` admissible starts: the default start first, then seeded
/// draws from the sampler (or, for finite spaces, enumeration order).
template <class E, class D>
std::vector<PairPoint<E>> admissible_starts(const ProblemInstance<E, D>& problem, std::size_t count,
                                            std::uint64_t seed) {
  std::vector<PairPoint<E>> out;
  if (count == 0) return out;
  if (check_start(problem.op, problem.default_start).admissible) out.push_back(problem.default_start);
  const auto& space = *problem.space;
  if (space.is_finite()) {
    for (const E& a : *space.elements)
      for (const E& b : *space.elements) {
        if (out.size() >= count) return out;
        const PairPoint<E> z{a, b};
        if (!(z == problem.default_start) && check_start(problem.op, z).admissible) out.push_back(z);
      }
    return out;
  }
  constexpr std::size_t kBatch = 256;
  for (std::uint64_t round = 0; out.size() < count && round < 64; ++round) {
    const auto pool = space.sampler(2 * kBatch, derive_seed(seed, round));
    for (std::size_t i = 0; i < kBatch && out.size() < count; ++i) {
      const PairPoint<E> z{pool[2 * i], pool[2 * i + 1]};
      if (check_start(problem.op, z).admissible) out.push_back(z);
    }
  }
  return out;
}

}  // namespace coupled_fp
