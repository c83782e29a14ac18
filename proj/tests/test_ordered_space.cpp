#include <doctest.h>

#include <random>

#include "coupled_fp/finite_space.hpp"
#include "coupled_fp/ordered_space.hpp"
#include "oracle.hpp"

using namespace coupled_fp;

namespace {

FiniteSpaceData three_points(Rational ab, Rational ac, Rational bc) {
  FiniteSpaceData data;
  data.labels = {"a", "b", "c"};
  data.distance = {{0, ab, ac}, {ab, 0, bc}, {ac, bc, 0}};
  data.leq = {{true, false, false}, {false, true, false}, {false, false, true}};
  return data;
}

FiniteSpace from_instance(const oracle::Instance& in) {
  return make_finite_space(parse_finite_space(oracle::to_json(in)));
}

}  // namespace

TEST_CASE("d2 on the real line") {
  const auto R = real_line();
  CHECK(d2(PairPoint<double>{0, 0}, PairPoint<double>{0, 0}, R) == 0.0);
  CHECK(d2(PairPoint<double>{-3, 3}, PairPoint<double>{-2.4, 2.4}, R) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(d2(PairPoint<double>{1, 5}, PairPoint<double>{4, 1}, R) == 3.5);
}

TEST_CASE("d2 is symmetric and satisfies the triangle inequality on samples") {
  const auto R = real_line(100);
  const auto pts = R.sampler(6000, 3);
  for (std::size_t i = 0; i < 1000; ++i) {
    const PairPoint<double> a{pts[6 * i], pts[6 * i + 1]}, b{pts[6 * i + 2], pts[6 * i + 3]},
        c{pts[6 * i + 4], pts[6 * i + 5]};
    REQUIRE(d2(a, b, R) == d2(b, a, R));
    REQUIRE(d2(a, c, R) <= d2(a, b, R) + d2(b, c, R) + 1e-12);
    REQUIRE(d2(a, a, R) == 0.0);
  }
}

TEST_CASE("d2 vanishes only on equal pairs") {
  const auto R = real_line();
  CHECK(d2(PairPoint<double>{1, 2}, PairPoint<double>{1, 2.5}, R) > 0);
  CHECK(d2(PairPoint<double>{1, 2}, PairPoint<double>{0.5, 2}, R) > 0);
}

TEST_CASE("product order examples") {
  const auto R = real_line();
  CHECK(product_leq(PairPoint<double>{1, 3}, PairPoint<double>{2, 1}, R) == Ordering::less_equal);
  CHECK(product_leq(PairPoint<double>{2, 1}, PairPoint<double>{1, 3}, R) == Ordering::greater);
  CHECK(product_leq(PairPoint<double>{2, 3}, PairPoint<double>{1, 1}, R) == Ordering::incomparable);
  CHECK(product_leq(PairPoint<double>{2, 3}, PairPoint<double>{2, 3}, R) == Ordering::less_equal);
  CHECK_FALSE(comparable(PairPoint<double>{0, 0}, PairPoint<double>{1, 1}, R));
}

TEST_CASE("out-of-domain elements are rejected") {
  const auto R = real_line();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(d2(PairPoint<double>{nan, 0}, PairPoint<double>{0, 0}, R), InputError);
  CHECK_THROWS_AS(product_leq(PairPoint<double>{0, 0}, PairPoint<double>{0, INFINITY}, R), InputError);

  const auto S = make_finite_space(three_points(1, 2, 1));
  CHECK_THROWS_AS(d2(PairPoint<Index>{0, 7}, PairPoint<Index>{0, 0}, S), InputError);
}

TEST_CASE("product order and d2 inherit the axioms on random finite spaces") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto in = oracle::random_instance(rng, 2 + trial % 3);
    const auto S = from_instance(in);
    REQUIRE(audit_space(S, 3, 0).all_passed());

    std::vector<PairPoint<Index>> pts;
    for (Index a = 0; a < S.elements->size(); ++a)
      for (Index b = 0; b < S.elements->size(); ++b) pts.push_back({a, b});
    for (const auto& a : pts)
      for (const auto& b : pts) {
        const auto ab = product_leq(a, b, S);
        const auto ba = product_leq(b, a, S);
        REQUIRE(is_leq(product_leq(a, a, S)));
        if (is_leq(ab) && is_leq(ba)) REQUIRE(a == b);
        REQUIRE((ab == Ordering::incomparable) == (ba == Ordering::incomparable));
        REQUIRE(d2(a, b, S) == d2(b, a, S));
        REQUIRE((d2(a, b, S) == 0) == (a == b));
        for (const auto& c : pts) {
          if (is_leq(ab) && is_leq(product_leq(b, c, S))) REQUIRE(is_leq(product_leq(a, c, S)));
          REQUIRE(d2(a, c, S) <= d2(a, b, S) + d2(b, c, S));
        }
      }
  }
}

TEST_CASE("audit passes on the real line") {
  const auto report = audit_space(real_line(), 2000, 42);
  CHECK(report.all_passed());
  CHECK_FALSE(report.exhaustive);
  CHECK(report.axiom("triangle_inequality").checked >= 2000);
}

TEST_CASE("audit catches an asymmetric distance") {
  auto S = real_line();
  S.distance = [](double a, double b) { return a - b; };
  const auto report = audit_space(S, 500, 1);
  CHECK_FALSE(report.all_passed());
  const auto& sym = report.axiom("symmetry");
  REQUIRE_FALSE(sym.passed);
  REQUIRE(sym.witness.size() == 2);
  CHECK(S.distance(sym.witness[0], sym.witness[1]) != S.distance(sym.witness[1], sym.witness[0]));
}

TEST_CASE("audit names the triangle witness on a three-point space") {
  const auto S = make_finite_space(three_points(1, 3, 1));
  const auto report = audit_space(S, 3, 0);
  CHECK(report.exhaustive);
  const auto& tri = report.axiom("triangle_inequality");
  REQUIRE_FALSE(tri.passed);
  CHECK(tri.witness == std::vector<Index>{0, 1, 2});
  CHECK(report.axiom("symmetry").passed);
  CHECK(report.axiom("antisymmetry").passed);
}

TEST_CASE("audit catches order defects") {
  auto data = three_points(1, 2, 1);
  data.leq = {{true, true, false}, {false, true, true}, {false, false, true}};
  const auto transitivity = audit_space(make_finite_space(data), 3, 0).axiom("transitivity");
  CHECK_FALSE(transitivity.passed);
  CHECK(transitivity.witness == std::vector<Index>{0, 1, 2});

  data.leq = {{true, true, false}, {true, true, false}, {false, false, true}};
  CHECK_FALSE(audit_space(make_finite_space(data), 3, 0).axiom("antisymmetry").passed);

  data.leq[2][2] = false;
  CHECK_FALSE(audit_space(make_finite_space(data), 3, 0).axiom("reflexivity").passed);
}

TEST_CASE("audit rejects too few samples") {
  CHECK_THROWS_AS(audit_space(real_line(), 2, 0), InputError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("7/4") == Rational(7, 4));
  CHECK(parse_rational("2e-3") == Rational(1, 500));
  CHECK(to_rational(0.1) == Rational(1, 10));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("finite space parsing errors carry locations") {
  nlohmann::json doc = {{"elements", {"a", "b"}}, {"distance", {{0, 1}, {1, 0}}}, {"leq", {{1, 0}, {0, 1}}}};
  CHECK(parse_finite_space(doc).size() == 2);

  auto bad = doc;
  bad["distance"][1] = {1};
  CHECK_THROWS_WITH_AS(parse_finite_space(bad), doctest::Contains("distance[1]"), InputError);

  bad = doc;
  bad["leq"][0][1] = 2;
  CHECK_THROWS_WITH_AS(parse_finite_space(bad), doctest::Contains("leq[0][1]"), InputError);

  bad = doc;
  bad["distance"][0][1] = "x/y";
  CHECK_THROWS_WITH_AS(parse_finite_space(bad), doctest::Contains("distance[0][1]"), InputError);

  bad = doc;
  bad.erase("leq");
  CHECK_THROWS_AS(parse_finite_space(bad), InputError);
}
