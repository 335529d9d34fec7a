#include "claspkit/rational_function.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace claspkit {

namespace {

// Removes factors of q from p, returning how many were removed.
int strip_low_zeros(IntPoly& p) {
  if (p.is_zero()) return 0;
  int k = 0;
  while (sgn(p[k]) == 0) ++k;
  if (k == 0) return 0;
  std::vector<Integer> c(p.coeffs().begin() + k, p.coeffs().end());
  p = IntPoly(std::move(c));
  return k;
}

IntPoly reversed(const IntPoly& p) {
  std::vector<Integer> c(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(c));
}

IntPoly shift_up(const IntPoly& p, int k) {
  if (k == 0 || p.is_zero()) return p;
  std::vector<Integer> c(static_cast<size_t>(k));
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPoly(std::move(c));
}

}  // namespace

RationalFunction::RationalFunction(long c) : den_(IntPoly::constant(1)) {
  if (c != 0) num_ = IntPoly::constant(c);
}

RationalFunction::RationalFunction(const Rational& c) {
  *this = make(0, IntPoly::constant(c.get_num()), IntPoly::constant(c.get_den()));
}

RationalFunction::RationalFunction(const LaurentPoly& num) : RationalFunction(num, LaurentPoly(1L)) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  const IntegralQForm n = to_integral_q_form(num);
  const IntegralQForm d = to_integral_q_form(den);
  // num/den = q^(sn - sd) * (pn * dd) / (pd * dn)
  *this = make(n.shift - d.shift, n.poly * d.denom, d.poly * n.denom);
}

RationalFunction RationalFunction::make(int shift, IntPoly n, IntPoly d) {
  if (d.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RationalFunction f;
  if (n.is_zero()) return f;
  shift += strip_low_zeros(n);
  shift -= strip_low_zeros(d);
  f.shift_ = shift;
  f.num_ = std::move(n);
  f.den_ = std::move(d);
  f.canonicalize();
  return f;
}

void RationalFunction::canonicalize() {
  if (den_.degree() > 0 && num_.degree() > 0) {
    IntPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = *try_divexact(num_, g);
      den_ = *try_divexact(den_, g);
    }
  }
  Integer c = num_.content();
  Integer cd = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (sgn(den_.lead()) < 0) c = -c;
  if (c != 1) {
    num_ = num_.divexact(c);
    den_ = den_.divexact(c);
  }
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return make(-shift_, den_, num_);
}

RationalFunction RationalFunction::bar() const {
  if (is_zero()) return *this;
  return make(-shift_ - num_.degree() + den_.degree(), reversed(num_), reversed(den_));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int s = std::min(shift_, o.shift_);
  if (den_ == o.den_) {
    *this = make(s, shift_up(num_, shift_ - s) + shift_up(o.num_, o.shift_ - s), den_);
  } else {
    *this = make(s, shift_up(num_, shift_ - s) * o.den_ + shift_up(o.num_, o.shift_ - s) * den_,
                 den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  *this = make(shift_ + o.shift_, num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  return f;
}

std::string RationalFunction::to_string() const {
  if (is_laurent_poly()) return num().to_string();
  return "(" + num().to_string() + ")/(" + den().to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

bool cross_equal(const RationalFunction& x, const RationalFunction& y) {
  return x.num() * y.den() == y.num() * x.den();
}

}  // namespace claspkit
