#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "coupled_fp/conditions.hpp"
#include "coupled_fp/problems.hpp"
#include "fixtures.hpp"

using namespace coupled_fp;

namespace {

nlohmann::json chain3() {
  std::ifstream in(COUPLED_FP_DATA_DIR "/chain3.json");
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("registry resolves built-in names") {
  const auto s = std::get<RealProblem>(builtin("samet_example"));
  CHECK(s.op(-3, 3) == doctest::Approx(-2.4));
  CHECK(s.default_start == PairPoint<double>{-3, 3});
  CHECK(std::holds_alternative<RealProblem>(builtin("arctan_example")));
  CHECK(std::get<RealProblem>(builtin(" linear( 1, 2 ,7 )")).op(7, 0) == doctest::Approx(1.0));
  CHECK(std::holds_alternative<FiniteProblem>(builtin("finite_poset(" COUPLED_FP_DATA_DIR "/chain3.json)")));
  CHECK(std::holds_alternative<FiniteProblem>(builtin(COUPLED_FP_DATA_DIR "/chain3.json")));
}

TEST_CASE("unknown names list the registry") {
  CHECK_THROWS_WITH_AS(builtin("nope"), doctest::Contains("samet_example"), InputError);
  CHECK_THROWS_AS(builtin("linear(1,x,3)"), InputError);
  CHECK_THROWS_AS(builtin("linear(1,1,0)"), InputError);
  CHECK_THROWS_AS(builtin("linear(-1,1,3)"), InputError);
  CHECK_THROWS_AS(builtin("missing.json"), InputError);
}

TEST_CASE("linear(1,3,5) is the worked example") {
  const auto a = samet_example();
  const auto b = linear_problem(1, 3, 5);
  const auto pts = a.space->sampler(2000, 12);
  for (std::size_t i = 0; i < 1000; ++i) REQUIRE(a.op(pts[2 * i], pts[2 * i + 1]) == b.op(pts[2 * i], pts[2 * i + 1]));
  CHECK(a.expected_fixed_point == b.expected_fixed_point);
  CHECK(b.default_start == PairPoint<double>{-3, 3});
}

TEST_CASE("expected fixed points have zero residual") {
  for (const auto& p : {samet_example(), arctan_example(), linear_problem(1, 1, 3), linear_problem(2, 1, 7)}) {
    REQUIRE(p.expected_fixed_point);
    CHECK(residual(p.op, *p.expected_fixed_point) <= 1e-15);
    CHECK(check_start(p.op, p.default_start).admissible);
  }
  const auto c = load_finite(COUPLED_FP_DATA_DIR "/chain3.json");
  CHECK(residual(c.op, *c.expected_fixed_point) == 0);
  CHECK(check_start(c.op, c.default_start).direction == Direction::up);
}

TEST_CASE("linear(1,1,1) admits no Banach constant") {
  const auto p = linear_problem(1, 1, 1);
  CHECK(p.expected_fixed_point == PairPoint<double>{0, 0});
  for (double k : {0.0, 0.5, 0.9, 0.999}) {
    const auto r = check_banach_k(p.op, k);
    REQUIRE(r.verdict == Verdict::fails);
    CHECK(witness_reproduces(p.op, r));
  }
}

TEST_CASE("finite files: minimal spaces") {
  const nlohmann::json one = {
      {"schema_version", 1}, {"elements", {"p"}}, {"distance", {{0}}}, {"leq", {{1}}}, {"F", {{0}}}};
  const auto p = finite_problem_from_json(one, "one");
  CHECK(p.default_start == PairPoint<Index>{0, 0});
  CHECK(residual(p.op, p.default_start) == 0);
  CHECK(check_strict_contraction(p.op).verdict == Verdict::inconclusive);
  CHECK(check_mixed_monotone(p.op).verdict == Verdict::holds_on_samples);

  const auto two = fixtures::finite(fixtures::two_points(true, {{0, 0}, {0, 0}}));
  CHECK(check_strict_contraction(two.op).verdict == Verdict::holds_on_samples);
  CHECK(check_banach_k(two.op, Rational(0)).verdict == Verdict::holds_on_samples);
}

TEST_CASE("finite files: three-element chain verdicts match enumeration") {
  const auto doc = chain3();
  const auto p = finite_problem_from_json(doc, "chain3");
  oracle::Instance in;
  in.n = 3;
  in.d = {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}};
  in.leq = {{true, true, true}, {false, true, true}, {false, false, true}};
  in.F = doc["F"].get<std::vector<std::vector<int>>>();
  CHECK(to_string(check_mixed_monotone(p.op).verdict) == oracle::name(oracle::mixed_monotone(in)));
  CHECK(to_string(check_strict_contraction(p.op).verdict) == oracle::name(oracle::strict_contraction(in)));
  CHECK(check_strict_contraction(p.op).verdict == Verdict::holds_on_samples);
  const auto eps = fixtures::rationals({Rational(1, 2), Rational(1), Rational(2)});
  const std::vector<oracle::Q> eps_q{oracle::Q(1, 2), oracle::Q(1), oracle::Q(2)};
  CHECK(to_string(check_symmetric_mk(p.op, std::span<const Rational>(eps), p.delta_rule).verdict) ==
        oracle::name(oracle::band_grid(in, eps_q, oracle::Q(1, 8), true)));
  CHECK(to_string(check_samet(p.op, std::span<const Rational>(eps), p.delta_rule).verdict) ==
        oracle::name(oracle::band_grid(in, eps_q, oracle::Q(1, 8), false)));
}

TEST_CASE("finite files: malformed input") {
  const auto good = chain3();
  auto bad = good;
  bad.erase("schema_version");
  CHECK_THROWS_WITH_AS(finite_problem_from_json(bad, "f"), doctest::Contains("schema_version"), InputError);

  bad = good;
  bad["schema_version"] = 2;
  CHECK_THROWS_AS(finite_problem_from_json(bad, "f"), InputError);

  bad = good;
  bad["F"][2][1] = 3;
  CHECK_THROWS_WITH_AS(finite_problem_from_json(bad, "f"), doctest::Contains("F[2][1]"), InputError);

  bad = good;
  bad["F"].erase(0);
  CHECK_THROWS_AS(finite_problem_from_json(bad, "f"), InputError);

  bad = good;
  bad["start"] = {0};
  CHECK_THROWS_WITH_AS(finite_problem_from_json(bad, "f"), doctest::Contains("start"), InputError);

  bad = good;
  bad["delta_over_epsilon"] = "-1/2";
  CHECK_THROWS_AS(finite_problem_from_json(bad, "f"), InputError);

  const auto path = std::filesystem::temp_directory_path() / "coupled_fp_malformed.json";
  std::ofstream(path) << "{ \"schema_version\": 1, ";
  CHECK_THROWS_WITH_AS(load_finite(path), doctest::Contains("malformed"), InputError);
  std::filesystem::remove(path);
}

TEST_CASE("admissible starts") {
  const auto p = samet_example();
  const auto starts = admissible_starts(p, 20, 3);
  REQUIRE(starts.size() == 20);
  CHECK(starts.front() == p.default_start);
  for (const auto& z : starts) CHECK(check_start(p.op, z).admissible);
  CHECK(admissible_starts(p, 20, 3) == starts);

  const auto c = load_finite(COUPLED_FP_DATA_DIR "/chain3.json");
  for (const auto& z : admissible_starts(c, 100, 0)) CHECK(check_start(c.op, z).admissible);
}
