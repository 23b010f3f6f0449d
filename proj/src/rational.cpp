#include "seminormal/rational.hpp"

#include "seminormal/errors.hpp"

#include <cctype>
#include <sstream>

namespace seminormal {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num) / Rational(den);
}

Rational rational_pow(const Rational& a, long e) {
  if (e == 0) return Rational(1);
  if (a == 0) {
    if (e < 0) throw std::domain_error("0 raised to a negative power");
    return Rational(0);
  }
  Rational base = a;
  bool flip = e < 0;
  unsigned long k = flip ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  if (flip) acc = Rational(1) / acc;
  return acc;
}

std::string rational_str(const Rational& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&](bool allow_sign) -> BigInt {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos]);
      ++pos;
    }
    if (digits.empty()) throw ParseError("expected integer", start);
    BigInt v(digits);
    return neg ? BigInt(-v) : v;
  };
  BigInt num = parse_int(true);
  BigInt den = 1;
  skip_ws();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = parse_int(false);
    if (den == 0) throw ParseError("zero denominator", pos);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  return make_rational(num, den);
}

} // namespace seminormal
