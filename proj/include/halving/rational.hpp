#pragma once

// Exact rational scalars and the small amount of integer numerics the rest
// of the library needs. No floating point is used for any decision anywhere;
// decimals appear only in rendered output.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace halving {

using Scalar = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Int numerator(const Scalar& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Scalar& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Scalar& q) { return q.sign(); }
inline int sign(const Int& v) { return v.sign(); }

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  out = Int(std::string(s));
  return true;
}

}  // namespace detail

/// Parses "p" or "p/q" with decimal integer halves; q must be nonzero.
inline Scalar parse_scalar(std::string_view s) {
  auto slash = s.find('/');
  Int num, den;
  if (slash == std::string_view::npos) {
    if (!detail::parse_int(s, num)) throw ParseError("bad number: '" + std::string(s) + "'");
    return Scalar(num);
  }
  if (!detail::parse_int(s.substr(0, slash), num) || !detail::parse_int(s.substr(slash + 1), den))
    throw ParseError("bad fraction: '" + std::string(s) + "'");
  if (den.is_zero()) throw ParseError("zero denominator: '" + std::string(s) + "'");
  return Scalar(num, den);
}

/// Canonical text form: lowest terms, "p" when integral, else "p/q" with q > 0.
inline std::string format_scalar(const Scalar& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Floor of the square root of a non-negative integer.
inline Int isqrt(const Int& v) {
  if (v.sign() < 0) throw std::invalid_argument("isqrt of negative");
  return boost::multiprecision::sqrt(v);
}

/// Floor of the cube root of a non-negative integer (Newton, exact).
inline Int icbrt(const Int& v) {
  if (v.sign() < 0) throw std::invalid_argument("icbrt of negative");
  if (v.is_zero()) return 0;
  Int x = Int(1) << static_cast<unsigned>((boost::multiprecision::msb(v) / 3) + 1);
  while (true) {
    Int nx = (2 * x + v / (x * x)) / 3;
    if (nx >= x) break;
    x = nx;
  }
  while (x * x * x > v) --x;
  return x;
}

/// Fixed-point decimal with `digits` fractional places, round half to even.
/// Deterministic; used by the SVG renderer and report output only.
inline std::string format_decimal(const Scalar& q, unsigned digits) {
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const bool neg = q.sign() < 0;
  Int num = numerator(q);
  if (neg) num = -num;
  const Int den = denominator(q);
  Int whole = num * scale;
  Int units = whole / den;
  const Int rem = whole % den;
  const int twice = Int(2 * rem).compare(den);
  if (twice > 0 || (twice == 0 && (units & 1) == 1)) ++units;
  Int ip = units / scale;
  Int fp = units % scale;
  std::string frac = fp.str();
  if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
  std::string out = (neg && (ip != 0 || fp != 0)) ? "-" : "";
  out += ip.str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace halving
