#include "coupled_fp/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace coupled_fp {

namespace {

Rational pow10(int exponent) {
  boost::multiprecision::cpp_int p = 1;
  for (int i = 0; i < exponent; ++i) p *= 10;
  return Rational(p);
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  auto fail = [&] { throw InputError("not a number: '" + std::string(original) + "'"); };
  if (text.empty()) fail();

  bool negative = false;
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  boost::multiprecision::cpp_int digits = 0;
  int scale = 0;
  bool any_digit = false;
  bool after_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (after_point) ++scale;
    } else if (c == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) fail();

  int exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') fail();
    ++pos;
    const auto rest = text.substr(pos);
    const char* first = rest.data();
    if (!rest.empty() && rest.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, rest.data() + rest.size(), exponent);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) fail();
  }

  Rational value(digits);
  const int shift = exponent - scale;
  if (shift >= 0) {
    value *= pow10(shift);
  } else {
    value /= pow10(-shift);
  }
  return negative ? Rational(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto t = trim(text);
  if (const auto slash = t.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(trim(t.substr(0, slash)), text);
    const Rational den = parse_decimal(trim(t.substr(slash + 1)), text);
    if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(t, text);
}

Rational to_rational(double value) {
  if (!std::isfinite(value)) throw InputError("non-finite value cannot be made exact");
  return parse_rational(format_double(value));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_rational(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace coupled_fp
