#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rank2ec {

// Exact arithmetic substrate.  cpp_int / cpp_rational keep values canonical
// (lowest terms, positive denominator), which is exactly the contract the
// rest of the library relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Largest n >= 0 with n*n <= r.  Requires r >= 0.
inline BigInt floor_sqrt(const Rational& r) {
  if (r < 0) throw std::domain_error("floor_sqrt: negative argument");
  const BigInt p = numerator(r), q = denominator(r);
  // floor(sqrt(p/q)) == floor(isqrt(p*q) / q)
  const BigInt pq = p * q;
  return BigInt(boost::multiprecision::sqrt(pq)) / q;
}

/// Parses "12", "-3/4" or "7.25" into an exact rational.
inline Rational parse_rational(std::string_view s) {
  auto fail = [&] { throw std::invalid_argument("parse_rational: '" + std::string(s) + "'"); };
  if (s.empty()) fail();
  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
  std::string intpart, fracpart, denpart;
  for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) intpart += s[i];
  if (intpart.empty()) fail();
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) fracpart += s[i];
    if (fracpart.empty()) fail();
  } else if (i < s.size() && s[i] == '/') {
    for (++i; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) denpart += s[i];
    if (denpart.empty()) fail();
  }
  if (i != s.size()) fail();
  Rational r;
  if (!denpart.empty()) {
    BigInt den(denpart);
    if (den == 0) fail();
    r = Rational(BigInt(intpart), den);
  } else if (!fracpart.empty()) {
    BigInt scale = 1;
    for (std::size_t k = 0; k < fracpart.size(); ++k) scale *= 10;
    r = Rational(BigInt(intpart) * scale + BigInt(fracpart), scale);
  } else {
    r = Rational(BigInt(intpart));
  }
  return neg ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace rank2ec
