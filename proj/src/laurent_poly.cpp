#include "claspkit/laurent_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace claspkit {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Exponents{0, 0, 0}, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponents{0, 0, 0}, c);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Exponents, Rational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const Rational& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_q_poly(const IntPoly& p, int shift) {
  LaurentPoly out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (sgn(p[i]) != 0) out.terms_.emplace(Exponents{i + shift, 0, 0}, Rational(p[i]));
  }
  return out;
}

bool LaurentPoly::uses(Var v) const {
  const auto idx = static_cast<size_t>(v);
  return std::any_of(terms_.begin(), terms_.end(),
                     [idx](const auto& t) { return t.first[idx] != 0; });
}

int LaurentPoly::min_exponent(Var v) const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  const auto idx = static_cast<size_t>(v);
  int m = terms_.begin()->first[idx];
  for (const auto& [e, c] : terms_) m = std::min(m, e[idx]);
  return m;
}

int LaurentPoly::max_exponent(Var v) const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  const auto idx = static_cast<size_t>(v);
  int m = terms_.begin()->first[idx];
  for (const auto& [e, c] : terms_) m = std::max(m, e[idx]);
  return m;
}

Rational LaurentPoly::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{-e[0], -e[1], -e[2]}, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& s) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), Exponents{e[0] + s[0], e[1] + s[1], e[2] + s[2]}, c);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1L), base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [e, x] : terms_) x *= c;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      out.add_term({ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]}, cx * cy);
    }
  }
  return out;
}

namespace {

void write_monomial(std::ostream& os, const Exponents& e) {
  static constexpr const char* names[kNumVars] = {"q", "A", "B"};
  bool first = true;
  // A and B first so that q-powers read as the trailing twist.
  for (int idx : {1, 2, 0}) {
    if (e[static_cast<size_t>(idx)] == 0) continue;
    if (!first) os << '*';
    os << names[idx];
    if (e[static_cast<size_t>(idx)] != 1) os << '^' << e[static_cast<size_t>(idx)];
    first = false;
  }
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool unit_monomial = e == Exponents{0, 0, 0};
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (unit_monomial) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      write_monomial(os, e);
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly substitute(const LaurentPoly& x, Var var, int power) {
  if (var == Var::q) throw std::invalid_argument("substitute: only A or B can be specialized");
  const auto idx = static_cast<size_t>(var);
  LaurentPoly out;
  for (const auto& [e, c] : x.terms()) {
    Exponents f = e;
    f[0] += power * e[idx];
    f[idx] = 0;
    out.add_term(f, c);
  }
  return out;
}

IntegralQForm to_integral_q_form(const LaurentPoly& x) {
  if (!x.is_univariate_q()) throw std::invalid_argument("expected a polynomial in q only");
  IntegralQForm form;
  if (x.is_zero()) return form;
  Integer den = 1;
  for (const auto& [e, c] : x.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const int lo = x.min_exponent(Var::q);
  const int hi = x.max_exponent(Var::q);
  std::vector<Integer> coeffs(static_cast<size_t>(hi - lo) + 1);
  for (const auto& [e, c] : x.terms()) {
    Integer v = c.get_num() * (den / c.get_den());
    coeffs[static_cast<size_t>(e[0] - lo)] = v;
  }
  form.shift = lo;
  form.poly = IntPoly(std::move(coeffs));
  form.denom = den;
  return form;
}

}  // namespace claspkit
