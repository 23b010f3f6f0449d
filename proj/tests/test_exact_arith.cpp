#include "seminormal/errors.hpp"
#include "seminormal/laurent.hpp"
#include "seminormal/ratfunc.hpp"

#include <doctest.h>

#include <random>

using namespace seminormal;

namespace {

LaurentPoly P() { return LaurentPoly::var_p(); }
LaurentPoly Q() { return LaurentPoly::var_q(); }
LaurentPoly C(long v) { return LaurentPoly::constant(Rational(v)); }

// Independent oracle: univariate polynomial long division in a single
// variable, on dense coefficient vectors (index = exponent).
std::vector<Rational> long_divide(std::vector<Rational> num, const std::vector<Rational>& den) {
  REQUIRE(!den.empty());
  REQUIRE(den.back() != 0);
  REQUIRE(num.size() >= den.size());
  std::vector<Rational> quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Rational& r : num) REQUIRE(r == 0); // division must be exact
  return quot;
}

std::mt19937 rng(20240817);

Rational rand_coeff() {
  std::uniform_int_distribution<int> d(-3, 3);
  int v = d(rng);
  return Rational(v == 0 ? 1 : v);
}

LaurentPoly rand_poly() {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> exp(-2, 2);
  LaurentPoly poly;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) poly.add_term({exp(rng), exp(rng)}, rand_coeff());
  return poly;
}

RatFunc rand_ratfunc() {
  LaurentPoly den = rand_poly();
  while (den.is_zero()) den = rand_poly();
  return RatFunc::normalized(rand_poly(), den);
}

void check_canonical(const RatFunc& f) {
  if (f.is_zero()) {
    CHECK(f.den().is_one());
    return;
  }
  CHECK(f.num().min_p_exp() >= 0);
  CHECK(f.num().min_q_exp() >= 0);
  CHECK(f.den().min_p_exp() >= 0);
  CHECK(f.den().min_q_exp() >= 0);
  CHECK(poly_gcd(f.num(), f.den()).is_one());
  CHECK(f.den().leading().second > 0);
  CHECK(rational_content(f.den()) == 1);
  // No common monomial factor remains.
  CHECK(std::min(f.num().min_p_exp(), f.den().min_p_exp()) == 0);
  CHECK(std::min(f.num().min_q_exp(), f.den().min_q_exp()) == 0);
}

} // namespace

TEST_CASE("rf_normalize on the worked examples") {
  // (q - q^-1) / (1 - q^-2) = q, checked by cross multiplication.
  LaurentPoly num = Q() - LaurentPoly::monomial(1, 0, -1);
  LaurentPoly den = C(1) - LaurentPoly::monomial(1, 0, -2);
  RatFunc f = RatFunc::normalized(num, den);
  CHECK(f == RatFunc::var_q());
  CHECK(RatFunc::var_q().num() * den == num * RatFunc::var_q().den());

  CHECK(RatFunc::normalized(LaurentPoly(), P() + Q()).is_zero());

  // (p^2 - 1) / (p - 1) = p + 1, against the long-division oracle.
  RatFunc g = RatFunc::normalized(P() * P() - C(1), P() - C(1));
  std::vector<Rational> quot = long_divide({-1, 0, 1}, {-1, 1});
  CHECK(quot == std::vector<Rational>{1, 1}); // 1 + p
  CHECK(g == RatFunc::var_p() + RatFunc::from_int(1));

  CHECK_THROWS_AS(RatFunc::normalized(Q(), LaurentPoly()), std::domain_error);
}

TEST_CASE("rf_normalize is idempotent and canonical") {
  for (int i = 0; i < 300; ++i) {
    RatFunc f = rand_ratfunc();
    check_canonical(f);
    CHECK(RatFunc::normalized(f.num(), f.den()) == f);
  }
}

TEST_CASE("rf_arith examples") {
  RatFunc q = RatFunc::var_q();
  CHECK((q + (-q)).is_zero());
  CHECK((q * RatFunc::q_power(-1)).is_one());
  RatFunc num = RatFunc::var_q() - RatFunc::q_power(-1);
  RatFunc den = RatFunc::from_int(1) - RatFunc::q_power(-2);
  CHECK(num / den == q);
  CHECK_THROWS_AS(q / RatFunc(), std::domain_error);
}

TEST_CASE("field axioms on random values") {
  for (int i = 0; i < 120; ++i) {
    RatFunc a = rand_ratfunc();
    RatFunc b = rand_ratfunc();
    RatFunc c = rand_ratfunc();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    check_canonical(a * b);
    check_canonical(a + b);
  }
}

TEST_CASE("rf_eval") {
  CHECK(RatFunc::var_q().eval(1, 1) == 1);
  RatFunc f = RatFunc::normalized(Q() - LaurentPoly::monomial(1, 0, -1),
                                  C(1) - LaurentPoly::monomial(1, 0, -2));
  CHECK(f.eval(1, 1) == 1);
  RatFunc pole = RatFunc::from_int(1) / (RatFunc::var_q() - RatFunc::from_int(1));
  CHECK_THROWS_AS(pole.eval(1, 1), PoleError);
  // Evaluation respects arithmetic.
  RatFunc g = rand_ratfunc();
  Rational p0(2), q0 = Rational(3) / 2;
  if (g.den().eval(p0, q0) != 0) {
    RatFunc h = rand_ratfunc();
    if (h.den().eval(p0, q0) != 0)
      CHECK((g * h).eval(p0, q0) == g.eval(p0, q0) * h.eval(p0, q0));
  }
}

TEST_CASE("partial substitution") {
  // (q - q^-1)/(1 + p^2) at p = 1 becomes (q - q^-1)/2.
  RatFunc f = (RatFunc::var_q() - RatFunc::q_power(-1)) /
              (RatFunc::from_int(1) + RatFunc::p_power(2));
  RatFunc at_p1 = f.subst_p(1);
  CHECK(at_p1 == (RatFunc::var_q() - RatFunc::q_power(-1)) / RatFunc::from_int(2));
  CHECK(at_p1.subst_q(1).is_zero());
}

TEST_CASE("poly_gcd examples") {
  LaurentPoly a = P() * P() - C(1);
  LaurentPoly b = P() - C(1);
  LaurentPoly g = poly_gcd(a, b);
  CHECK(g == P() - C(1));
  LaurentPoly quot;
  CHECK(try_divide(a, g, quot));
  CHECK(quot * g == a);
  CHECK(poly_gcd(Q(), P()).is_one());
  LaurentPoly f = (P() + Q()).scaled(Rational(-2));
  CHECK(poly_gcd(LaurentPoly(), f) == P() + Q()); // primitive, positive leading
  CHECK(poly_gcd(LaurentPoly(), LaurentPoly()).is_zero());
}

TEST_CASE("poly_gcd on random products") {
  // gcd(g*a, g*b) must be divisible by g.
  for (int i = 0; i < 80; ++i) {
    LaurentPoly g = rand_poly().shifted(2, 2); // nonnegative exponents
    LaurentPoly a = rand_poly().shifted(2, 2);
    LaurentPoly b = rand_poly().shifted(2, 2);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    LaurentPoly d = poly_gcd(g * a, g * b);
    LaurentPoly quot;
    CHECK(try_divide(d, make_primitive(g), quot)); // g | gcd up to content
    LaurentPoly qa, qb;
    CHECK(try_divide(g * a, d, qa));
    CHECK(try_divide(g * b, d, qb));
  }
}

TEST_CASE("rf_parse and rf_format") {
  RatFunc f = RatFunc::parse("q - q^-1");
  CHECK(f == RatFunc::var_q() - RatFunc::q_power(-1));
  CHECK(f.str() == "q - q^-1");

  RatFunc g = RatFunc::parse("(q^2 - 1)/(q)");
  CHECK(g == f); // same canonical value, checked structurally
  CHECK(g.num() * f.den() == f.num() * g.den());

  CHECK_THROWS_AS(RatFunc::parse("1/0"), ParseError);
  CHECK_THROWS_AS(RatFunc::parse("q +"), ParseError);
  CHECK_THROWS_AS(RatFunc::parse("(q)/(q - q)"), ParseError);

  CHECK(RatFunc::parse("3/2*p^2*q - 1").str() == "3/2*p^2*q - 1");
  CHECK(RatFunc::parse("-p + q").str() == "-p + q");
  CHECK(RatFunc().str() == "0");
  CHECK(RatFunc::parse("(1)/(p^2 + 1)").str() == "(1)/(p^2 + 1)");
}

TEST_CASE("format round trip on random values") {
  for (int i = 0; i < 200; ++i) {
    RatFunc f = rand_ratfunc();
    CHECK(RatFunc::parse(f.str()) == f);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/2") == Rational(-3) / 2);
  CHECK(parse_rational(" 7/14 ") == Rational(1) / 2);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(rational_str(Rational(-3) / 2) == "-3/2");
  CHECK(rational_pow(Rational(2), -2) == Rational(1) / 4);
}
