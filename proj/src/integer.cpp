#include "sncd/integer.hpp"

#include <cctype>

#include "sncd/errors.hpp"

namespace sncd {

namespace {

Integer parse_integer(const std::string& text, const std::string& whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw ParseError("not a rational number: \"" + whole + "\"");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("not a rational number: \"" + whole + "\"");
  }
  return Integer(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);  // always positive
  Integer f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

}  // namespace sncd
