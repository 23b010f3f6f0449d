#pragma once

#include "seminormal/laurent.hpp"

#include <string>
#include <string_view>

namespace seminormal {

/// Rational function in p and q over the rationals, kept in canonical form:
///  - num, den have nonnegative exponents with no common monomial factor,
///  - gcd(num, den) = 1 as polynomials,
///  - den has integer coefficients of content 1 and positive graded-lex
///    leading coefficient.
/// The canonical form makes equality structural and specialization at any
/// nonpole point (in particular p = q = 1) well defined.
class RatFunc {
public:
  RatFunc() : num_(), den_(LaurentPoly::constant(1)) {} // zero

  /// rf_normalize: builds the canonical representative of num/den.
  /// Throws std::domain_error when den = 0.
  static RatFunc normalized(LaurentPoly num, LaurentPoly den);

  static RatFunc constant(const Rational& c);
  static RatFunc from_int(long v) { return constant(Rational(v)); }
  static RatFunc var_p() { return monomial(1, 1, 0); }
  static RatFunc var_q() { return monomial(1, 0, 1); }
  static RatFunc monomial(const Rational& c, int p_exp, int q_exp);
  static RatFunc p_power(int e) { return monomial(1, e, 0); }
  static RatFunc q_power(int e) { return monomial(1, 0, e); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const; ///< throws std::domain_error on o = 0
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// rf_eval; throws PoleError when the denominator vanishes at the point.
  Rational eval(const Rational& p0, const Rational& q0) const;
  /// Partial specialization p = p0 (resp. q = q0); throws PoleError when the
  /// denominator collapses to zero.
  RatFunc subst_p(const Rational& p0) const;
  RatFunc subst_q(const Rational& q0) const;

  /// rf_format: canonical text. Laurent-polynomial form when the denominator
  /// is a monomial ("q - q^-1"), otherwise "(num)/(den)".
  std::string str() const;

  /// rf_parse; accepts the canonical grammar, normalizes. Throws ParseError.
  static RatFunc parse(std::string_view text);

private:
  /// Adopts the pair without any checks.
  static RatFunc raw(LaurentPoly num, LaurentPoly den);
  /// Rescales a coprime nonnegative-exponent pair into canonical form
  /// (integer-primitive denominator, positive leading coefficient).
  static RatFunc from_coprime(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_;
  LaurentPoly den_;
};

} // namespace seminormal
