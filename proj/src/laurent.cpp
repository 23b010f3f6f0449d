#include "seminormal/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace seminormal {

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

LaurentPoly LaurentPoly::monomial(const Rational& c, int p_exp, int q_exp) {
  LaurentPoly out;
  if (c != 0) out.terms_[{p_exp, q_exp}] = c;
  return out;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

const std::pair<const Exponents, Rational>& LaurentPoly::leading() const {
  assert(!terms_.empty());
  return *terms_.rbegin();
}

int LaurentPoly::min_p_exp() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e.p < m) m = e.p;
    first = false;
  }
  return m;
}

int LaurentPoly::min_q_exp() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e.q < m) m = e.q;
    first = false;
  }
  return m;
}

int LaurentPoly::max_p_exp() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.p);
  return m;
}

int LaurentPoly::max_q_exp() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.q);
  return m;
}

bool LaurentPoly::has_p() const {
  for (const auto& [e, c] : terms_)
    if (e.p != 0) return true;
  return false;
}

bool LaurentPoly::has_q() const {
  for (const auto& [e, c] : terms_)
    if (e.q != 0) return true;
  return false;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      out.add_term({ea.p + eb.p, ea.q + eb.q}, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_[e] = coeff * c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int dp, int dq) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[{e.p + dp, e.q + dq}] = c;
  return out;
}

Rational LaurentPoly::eval(const Rational& p0, const Rational& q0) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_)
    acc += c * rational_pow(p0, e.p) * rational_pow(q0, e.q);
  return acc;
}

LaurentPoly LaurentPoly::subst_p(const Rational& p0) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term({0, e.q}, c * rational_pow(p0, e.p));
  return out;
}

LaurentPoly LaurentPoly::subst_q(const Rational& q0) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term({e.p, 0}, c * rational_pow(q0, e.q));
  return out;
}

Rational rational_content(const LaurentPoly& poly) {
  assert(!poly.is_zero());
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [e, c] : poly.terms()) {
    num_gcd = gcd(num_gcd, BigInt(abs(numerator(c))));
    den_lcm = lcm(den_lcm, denominator(c));
  }
  return make_rational(num_gcd, den_lcm);
}

LaurentPoly make_primitive(const LaurentPoly& poly) {
  if (poly.is_zero()) return poly;
  Rational c = rational_content(poly);
  if (poly.leading().second < 0) c = -c;
  return poly.scaled(Rational(1) / c);
}

bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
  assert(!b.is_zero());
  quot = LaurentPoly();
  LaurentPoly rem = a;
  const auto& [eb, cb] = b.leading();
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.leading();
    int dp = er.p - eb.p;
    int dq = er.q - eb.q;
    if (dp < 0 || dq < 0) return false;
    LaurentPoly t = LaurentPoly::monomial(cr / cb, dp, dq);
    quot = quot + t;
    rem = rem - t * b;
  }
  return true;
}

namespace {

// Coefficient vector of a polynomial viewed in q over Q[p]; index = q exponent.
// Pre: nonnegative exponents.
std::vector<LaurentPoly> q_coefficients(const LaurentPoly& f) {
  std::vector<LaurentPoly> coeffs(static_cast<std::size_t>(f.max_q_exp()) + 1);
  for (const auto& [e, c] : f.terms())
    coeffs[static_cast<std::size_t>(e.q)].add_term({e.p, 0}, c);
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

LaurentPoly from_q_coefficients(const std::vector<LaurentPoly>& coeffs) {
  LaurentPoly out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (const auto& [e, c] : coeffs[j].terms())
      out.add_term({e.p, static_cast<int>(j)}, c);
  return out;
}

// Gcd for polynomials in a single variable (both inputs involve at most p, or
// at most q), as a primitive pseudo-remainder sequence. The remainder is
// rescaled to content 1 after every reduction step, which keeps the integer
// coefficients small.
LaurentPoly gcd_univariate(LaurentPoly a, LaurentPoly b) {
  a = make_primitive(a);
  b = make_primitive(b);
  while (!b.is_zero()) {
    const Exponents be = b.leading().first;
    LaurentPoly r = a;
    while (!r.is_zero()) {
      const auto& [re, rc] = r.leading();
      int dp = re.p - be.p;
      int dq = re.q - be.q;
      if (dp < 0 || dq < 0) break;
      r = r.scaled(b.leading().second) - b.shifted(dp, dq).scaled(rc);
      r = make_primitive(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  return make_primitive(a);
}

// Content of the q-coefficient vector: gcd in Q[p] of all coefficients.
LaurentPoly vector_content(const std::vector<LaurentPoly>& coeffs) {
  LaurentPoly g;
  for (const auto& c : coeffs) g = gcd_univariate(g, c);
  return g;
}

std::vector<LaurentPoly> divide_out(const std::vector<LaurentPoly>& coeffs,
                                    const LaurentPoly& divisor) {
  std::vector<LaurentPoly> out(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    bool ok = try_divide(coeffs[j], divisor, out[j]);
    assert(ok);
    (void)ok;
  }
  return out;
}

std::vector<LaurentPoly> primitive_part(std::vector<LaurentPoly> coeffs) {
  LaurentPoly cont = vector_content(coeffs);
  if (cont.is_zero() || cont.is_one()) return coeffs;
  return divide_out(coeffs, cont);
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b in q over Q[p];
// deg a >= deg b >= 0, b nonzero. Degree jumps are compensated so the scaling
// exponent is exact, as the subresultant divisions require.
std::vector<LaurentPoly> pseudo_rem(std::vector<LaurentPoly> a,
                                    const std::vector<LaurentPoly>& b) {
  const LaurentPoly& lcb = b.back();
  const std::size_t db = b.size() - 1;
  int e = static_cast<int>(a.size() - b.size()) + 1;
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t da = a.size() - 1;
    LaurentPoly lca = a.back();
    std::vector<LaurentPoly> next(da); // leading term cancels
    for (std::size_t j = 0; j < da; ++j) {
      next[j] = a[j] * lcb;
      std::size_t shift = da - db;
      if (j >= shift && j - shift < db) next[j] = next[j] - lca * b[j - shift];
    }
    while (!next.empty() && next.back().is_zero()) next.pop_back();
    a = std::move(next);
    --e;
  }
  for (; e > 0; --e)
    for (LaurentPoly& c : a) c = c * lcb;
  return a;
}

std::vector<LaurentPoly> divide_vector(const std::vector<LaurentPoly>& coeffs,
                                       const LaurentPoly& divisor) {
  return divide_out(coeffs, divisor);
}

LaurentPoly poly_pow(const LaurentPoly& base, int e) {
  LaurentPoly acc = LaurentPoly::constant(1);
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  assert(a.min_p_exp() >= 0 && a.min_q_exp() >= 0);
  assert(b.min_p_exp() >= 0 && b.min_q_exp() >= 0);
  if (a.is_zero()) return make_primitive(b);
  if (b.is_zero()) return make_primitive(a);

  // Common monomial factor, then work with polynomials of nonzero constant
  // part in at least one variable direction.
  int mp = std::min(a.min_p_exp(), b.min_p_exp());
  int mq = std::min(a.min_q_exp(), b.min_q_exp());
  LaurentPoly fa = a.shifted(-a.min_p_exp(), -a.min_q_exp());
  LaurentPoly fb = b.shifted(-b.min_p_exp(), -b.min_q_exp());
  LaurentPoly mono = LaurentPoly::monomial(1, mp, mq);

  if (fa.is_constant() || fb.is_constant()) return make_primitive(mono);
  if (!fa.has_q() && !fb.has_q()) return make_primitive(mono * gcd_univariate(fa, fb));
  if (!fa.has_p() && !fb.has_p()) return make_primitive(mono * gcd_univariate(fa, fb));

  // Bivariate case: subresultant pseudo-remainder sequence in q over Q[p]
  // (Brown-Traub), which bounds intermediate coefficient degrees without
  // content computations at every step.
  std::vector<LaurentPoly> ca = q_coefficients(fa);
  std::vector<LaurentPoly> cb = q_coefficients(fb);
  LaurentPoly cont_gcd = gcd_univariate(vector_content(ca), vector_content(cb));
  std::vector<LaurentPoly> f = primitive_part(std::move(ca));
  std::vector<LaurentPoly> g = primitive_part(std::move(cb));
  if (f.size() < g.size()) std::swap(f, g);
  LaurentPoly lead = LaurentPoly::constant(1); // lc of the previous step
  LaurentPoly h = LaurentPoly::constant(1);
  std::vector<LaurentPoly> result;
  while (true) {
    if (g.size() == 1) { // nonzero q-constant: primitive parts are coprime
      result = {LaurentPoly::constant(1)};
      break;
    }
    int delta = static_cast<int>(f.size() - g.size());
    std::vector<LaurentPoly> r = pseudo_rem(f, g);
    if (r.empty()) {
      result = primitive_part(std::move(g));
      break;
    }
    f = std::move(g);
    g = divide_vector(r, lead * poly_pow(h, delta));
    lead = f.back();
    if (delta > 0) {
      LaurentPoly hq;
      bool ok = try_divide(poly_pow(lead, delta), poly_pow(h, delta - 1), hq);
      assert(ok);
      (void)ok;
      h = std::move(hq);
    }
  }
  LaurentPoly pp_gcd = from_q_coefficients(result);
  return make_primitive(mono * cont_gcd * pp_gcd);
}

std::string poly_str(const LaurentPoly& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex.
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Rational mag = neg ? Rational(-c) : c;
    std::string mono;
    if (e.p != 0) {
      mono += 'p';
      if (e.p != 1) mono += '^' + std::to_string(e.p);
    }
    if (e.q != 0) {
      if (!mono.empty()) mono += '*';
      mono += 'q';
      if (e.q != 1) mono += '^' + std::to_string(e.q);
    }
    if (mono.empty()) {
      os << rational_str(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << rational_str(mag) << '*' << mono;
    }
  }
  return os.str();
}

} // namespace seminormal
