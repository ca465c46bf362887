#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <string>
#include <vector>

#include "skewlab/errors.hpp"

namespace skewlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational. cpp_rational keeps the canonical form (positive
/// denominator, reduced fraction) on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& q) { return q.sign(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Canonical "p/q" string; the "/q" part is omitted when q == 1.
inline std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Accepts "p", "-p", "p/q" with arbitrary-precision integers.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw ParseError("bad rational literal '" + text + "': " + e.what());
  }
}

using Point = std::vector<Rational>;

inline Rational dot(const Point& a, const Point& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

/// 2-d cross product a.x*b.y - a.y*b.x.
inline Rational cross2(const Point& a, const Point& b) {
  return a[0] * b[1] - a[1] * b[0];
}

inline Rational norm2(const Point& a) { return dot(a, a); }

inline Point sub(const Point& a, const Point& b) {
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

}  // namespace skewlab
