#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace coupled_fp {

/// Exact arbitrary-precision rational used for finite spaces.
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed user input: bad files, unknown problems, out-of-domain
/// elements, parameters outside their contract.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Comparison policy per distance type.
///
/// Doubles get a relative slack of 1e-12 on non-strict inequalities and on the
/// open upper edge of a Meir-Keeler band. The slack of a non-strict comparison
/// is taken relative to the larger of both sides and `scale`, the magnitude of
/// the points the two sides were computed from. Strict inequalities count ties
/// as violations. Rationals compare exactly.
template <class D>
struct Tolerance;

template <>
struct Tolerance<double> {
  static constexpr double relative = 1e-12;
  static constexpr bool exact = false;

  /// `a` is larger than `b` by more than rounding slack.
  static bool exceeds(double a, double b, double scale = 0.0) {
    return a - b > relative * std::max({std::abs(a), std::abs(b), scale}) || std::isnan(a) || std::isnan(b);
  }
  /// `a < b` does not hold.
  static bool violates_strict(double a, double b) { return !(a < b); }
  /// `lo <= h < lo + width`, with the open edge pulled in by the slack.
  static bool in_band(double h, double lo, double width) {
    return h >= lo && h < (lo + width) * (1.0 - relative);
  }
};

template <>
struct Tolerance<Rational> {
  static constexpr bool exact = true;

  static bool exceeds(const Rational& a, const Rational& b, double = 0.0) { return a > b; }
  static bool violates_strict(const Rational& a, const Rational& b) { return a >= b; }
  static bool in_band(const Rational& h, const Rational& lo, const Rational& width) {
    return h >= lo && h < lo + width;
  }
};

/// Parses "3", "-1.25", "2e-3" or "7/4" into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact rational value of the shortest decimal that round-trips `value`,
/// so 0.1 becomes 1/10 rather than its binary expansion.
Rational to_rational(double value);

double to_double(const Rational& value);

/// Shortest round-trip decimal.
std::string format_double(double value);

/// "p/q", or "p" for integers.
std::string format_rational(const Rational& value);

/// |e| for floating-point elements, 0 for anything else.
template <class E>
double magnitude(const E& e) {
  if constexpr (std::is_floating_point_v<E>) {
    return std::abs(e);
  } else {
    return 0.0;
  }
}

template <class D>
D from_double(double value) {
  if constexpr (std::is_same_v<D, double>) {
    return value;
  } else {
    return to_rational(value);
  }
}

template <class D>
D half(const D& value) {
  return value / 2;
}

inline double as_double(double v) { return v; }
inline double as_double(const Rational& v) { return to_double(v); }

inline std::string format_scalar(double v) { return format_double(v); }
inline std::string format_scalar(const Rational& v) { return format_rational(v); }

}  // namespace coupled_fp
