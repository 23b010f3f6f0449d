#include "seminormal/ratfunc.hpp"

#include "seminormal/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace seminormal {

RatFunc RatFunc::normalized(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RatFunc out;
  if (num.is_zero()) return out; // canonical zero is 0/1

  // Shift by a common monomial so both parts are polynomials with no common
  // monomial factor: the minimum exponent across num and den becomes 0.
  int dp = -std::min(num.min_p_exp(), den.min_p_exp());
  int dq = -std::min(num.min_q_exp(), den.min_q_exp());
  num = num.shifted(dp, dq);
  den = den.shifted(dp, dq);

  LaurentPoly g = poly_gcd(num, den);
  if (!g.is_one()) {
    LaurentPoly qn, qd;
    bool okn = try_divide(num, g, qn);
    bool okd = try_divide(den, g, qd);
    if (!okn || !okd) throw std::logic_error("gcd does not divide its arguments");
    num = std::move(qn);
    den = std::move(qd);
  }

  Rational scale = rational_content(den);
  if (den.leading().second < 0) scale = -scale;
  out.num_ = num.scaled(Rational(1) / scale);
  out.den_ = den.scaled(Rational(1) / scale);
  return out;
}

RatFunc RatFunc::constant(const Rational& c) { return monomial(c, 0, 0); }

RatFunc RatFunc::monomial(const Rational& c, int p_exp, int q_exp) {
  return normalized(LaurentPoly::monomial(c, p_exp, q_exp), LaurentPoly::constant(1));
}

namespace {

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_one()) return a;
  LaurentPoly quot;
  if (!try_divide(a, b, quot)) throw std::logic_error("expected exact polynomial division");
  return quot;
}

} // namespace

RatFunc RatFunc::raw(LaurentPoly num, LaurentPoly den) {
  RatFunc out;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

// Rescales a coprime num/den pair so den becomes integer-primitive with
// positive leading coefficient; no gcd work. The arithmetic fast paths
// produce already-coprime pairs from canonical operands.
RatFunc RatFunc::from_coprime(LaurentPoly num, LaurentPoly den) {
  if (num.is_zero()) return RatFunc();
  Rational scale = rational_content(den);
  if (den.leading().second < 0) scale = -scale;
  if (scale == 1) return raw(std::move(num), std::move(den));
  Rational inv_scale = Rational(1) / scale;
  return raw(num.scaled(inv_scale), den.scaled(inv_scale));
}

RatFunc RatFunc::operator-() const {
  RatFunc out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Both operands are canonical: only the denominator gcd and its echo in the
  // numerator can cancel.
  LaurentPoly g = poly_gcd(den_, o.den_);
  LaurentPoly b1 = divide_exact(den_, g);
  LaurentPoly d1 = divide_exact(o.den_, g);
  LaurentPoly num = num_ * d1 + o.num_ * b1;
  if (num.is_zero()) return RatFunc();
  LaurentPoly den = b1 * o.den_;
  if (!g.is_one()) {
    LaurentPoly h = poly_gcd(num, g);
    if (!h.is_one()) {
      num = divide_exact(num, h);
      den = divide_exact(den, h);
    }
  }
  return from_coprime(std::move(num), std::move(den));
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  LaurentPoly g1 = poly_gcd(num_, o.den_);
  LaurentPoly g2 = poly_gcd(o.num_, den_);
  LaurentPoly num = divide_exact(num_, g1) * divide_exact(o.num_, g2);
  LaurentPoly den = divide_exact(den_, g2) * divide_exact(o.den_, g1);
  return from_coprime(std::move(num), std::move(den));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return from_coprime(den_, num_);
}

Rational RatFunc::eval(const Rational& p0, const Rational& q0) const {
  Rational d = den_.eval(p0, q0);
  if (d == 0) throw PoleError("pole at the evaluation point");
  return num_.eval(p0, q0) / d;
}

RatFunc RatFunc::subst_p(const Rational& p0) const {
  LaurentPoly d = den_.subst_p(p0);
  if (d.is_zero()) throw PoleError("denominator vanishes identically at the given p");
  return normalized(num_.subst_p(p0), d);
}

RatFunc RatFunc::subst_q(const Rational& q0) const {
  LaurentPoly d = den_.subst_q(q0);
  if (d.is_zero()) throw PoleError("denominator vanishes identically at the given q");
  return normalized(num_.subst_q(q0), d);
}

std::string RatFunc::str() const {
  if (den_.is_monomial()) {
    // Canonical monomial denominators are monic, so the value is the Laurent
    // polynomial num / monomial.
    const auto& [e, c] = den_.leading();
    return poly_str(num_.shifted(-e.p, -e.q));
  }
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    skip_ws();
    RatFunc result;
    if (peek() == '(') {
      expect('(');
      LaurentPoly num = parse_poly();
      expect(')');
      skip_ws();
      expect('/');
      skip_ws();
      expect('(');
      LaurentPoly den = parse_poly();
      expect(')');
      if (den.is_zero()) throw ParseError("zero denominator", pos_);
      result = RatFunc::normalized(num, den);
    } else {
      result = RatFunc::normalized(parse_poly(), LaurentPoly::constant(1));
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    return result;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  BigInt parse_unsigned() {
    skip_ws();
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_]);
      ++pos_;
    }
    if (digits.empty()) throw ParseError("expected integer", pos_);
    return BigInt(digits);
  }

  int parse_exponent() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    BigInt v = parse_unsigned();
    if (v > 1000000) throw ParseError("exponent too large", pos_);
    int e = static_cast<int>(v.convert_to<long>());
    return neg ? -e : e;
  }

  // monomial := "p" ["^" int] ["*"] ["q" ["^" int]] | "q" ["^" int]
  Exponents parse_monomial() {
    Exponents e{0, 0};
    char c = peek();
    if (c == 'p') {
      ++pos_;
      e.p = 1;
      if (peek() == '^') {
        ++pos_;
        e.p = parse_exponent();
      }
      std::size_t save = pos_;
      char next = peek();
      if (next == '*') {
        ++pos_;
        if (peek() != 'q') {
          pos_ = save; // the '*' was not part of this monomial
          return e;
        }
        next = 'q';
      }
      if (next == 'q') {
        ++pos_;
        e.q = 1;
        if (peek() == '^') {
          ++pos_;
          e.q = parse_exponent();
        }
      }
      return e;
    }
    if (c == 'q') {
      ++pos_;
      e.q = 1;
      if (peek() == '^') {
        ++pos_;
        e.q = parse_exponent();
      }
      return e;
    }
    throw ParseError("expected monomial", pos_);
  }

  // term := integer ["/" posinteger] ["*" monomial] | monomial
  LaurentPoly parse_term() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt n = parse_unsigned();
      BigInt d = 1;
      std::size_t save = pos_;
      if (peek() == '/') {
        ++pos_;
        char after = peek();
        if (std::isdigit(static_cast<unsigned char>(after))) {
          d = parse_unsigned();
          if (d == 0) throw ParseError("zero denominator in coefficient", pos_);
        } else {
          pos_ = save; // structural '/' of the quotient form
        }
      }
      Rational coeff = make_rational(n, d);
      save = pos_;
      if (peek() == '*') {
        ++pos_;
        char after = peek();
        if (after == 'p' || after == 'q') {
          Exponents e = parse_monomial();
          return LaurentPoly::monomial(coeff, e.p, e.q);
        }
        pos_ = save;
      }
      return LaurentPoly::constant(coeff);
    }
    Exponents e = parse_monomial();
    return LaurentPoly::monomial(1, e.p, e.q);
  }

  // poly := ["-"] term { ("+" | "-") term }
  LaurentPoly parse_poly() {
    LaurentPoly acc;
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    }
    LaurentPoly t = parse_term();
    acc = neg ? -t : t;
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      t = parse_term();
      acc = (c == '-') ? acc - t : acc + t;
    }
    return acc;
  }
};

} // namespace

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).parse(); }

} // namespace seminormal
