#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sncd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd64(a, b) * b;
}

/// Largest divisor of n prime to p; p <= 1 means no prime is stripped.
inline std::int64_t prime_to_part(std::int64_t n, std::int64_t p) {
  if (p <= 1 || n == 0) return n;
  while (n % p == 0) n /= p;
  return n;
}

inline Integer prime_to_part(Integer n, std::int64_t p) {
  if (p <= 1 || n == 0) return n;
  while (n % p == 0) n /= p;
  return n;
}

inline Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

/// "num/den" or "num" when the denominator is one.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "a/b", "a" or "-a/b"; throws ParseError.
Rational parse_rational(const std::string& text);

/// floor(q) as an exact integer.
Integer floor(const Rational& q);

}  // namespace sncd
