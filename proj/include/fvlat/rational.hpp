#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>
#include <string_view>

#include "fvlat/error.hpp"

namespace fvlat {

/// Exact arbitrary-precision rational; always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Renders a rational as "p" (denominator 1) or "p/q" in lowest terms.
inline std::string rational_to_string(const Rational& r) {
  return r.str();
}

/// Parses "p" or "p/q" with an optional leading minus on p and q > 0.
/// Anything else is rejected.
inline Rational rational_from_string(std::string_view text) {
  const auto fail = [&] {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == num_begin) fail();
  Integer num(std::string(text.substr(0, i)));
  Integer den = 1;
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == den_begin || i != text.size()) fail();
    den = Integer(std::string(text.substr(den_begin)));
    if (den == 0) throw DomainError("malformed rational: zero denominator");
  }
  return Rational(num, den);
}

/// Least integer n with n >= r.
inline Integer ceil_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (num >= 0) return (num + den - 1) / den;
  return num / den;  // integer division truncates toward zero
}

inline Rational abs_rational(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace fvlat
