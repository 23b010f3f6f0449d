#pragma once

#include "seminormal/rational.hpp"

#include <map>
#include <string>

namespace seminormal {

/// Exponent pair of a monomial p^p_exp * q^q_exp; exponents may be negative.
struct Exponents {
  int p = 0;
  int q = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded-lexicographic order with p before q: total degree first, then p exponent.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = static_cast<long>(a.p) + a.q;
    long db = static_cast<long>(b.p) + b.q;
    if (da != db) return da < db;
    return a.p < b.p;
  }
};

/// Laurent polynomial in p and q with exact rational coefficients.
/// Invariant: no stored term has coefficient zero; zero is the empty map.
class LaurentPoly {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  LaurentPoly() = default;

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, int p_exp, int q_exp);
  static LaurentPoly var_p() { return monomial(1, 1, 0); }
  static LaurentPoly var_q() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Largest term in graded-lex order; poly must be nonzero.
  const std::pair<const Exponents, Rational>& leading() const;

  int min_p_exp() const; ///< 0 for the zero polynomial
  int min_q_exp() const;
  int max_p_exp() const;
  int max_q_exp() const;
  bool has_p() const; ///< some term with nonzero p exponent
  bool has_q() const;

  void add_term(const Exponents& e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(int dp, int dq) const; ///< multiply by p^dp q^dq

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Evaluation; the point coordinate must be nonzero wherever a negative
  /// exponent occurs.
  Rational eval(const Rational& p0, const Rational& q0) const;
  LaurentPoly subst_p(const Rational& p0) const;
  LaurentPoly subst_q(const Rational& q0) const;

private:
  TermMap terms_;
};

/// Positive rational c with poly/c integer-coefficient and content 1.
/// Pre: poly nonzero.
Rational rational_content(const LaurentPoly& poly);

/// Divides out the rational content and flips sign so the graded-lex leading
/// coefficient is positive. Zero maps to zero.
LaurentPoly make_primitive(const LaurentPoly& poly);

/// Exact polynomial division (nonnegative exponents). Returns false when the
/// division is not exact, leaving quot unspecified.
bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot);

/// GCD of polynomials with nonnegative exponents, primitive with positive
/// leading coefficient; gcd(0, f) = primitive form of f, gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Descending graded-lex text form, e.g. "q^2 - 1", "p^2*q + q", "-3/2*q".
std::string poly_str(const LaurentPoly& poly);

} // namespace seminormal
