#include "claspkit/qnum.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace claspkit {

LaurentPoly qint(long n, int level) {
  if (level < 1) throw std::invalid_argument("qint level must be positive");
  // [n]_v = sum_{k=0}^{|n|-1} v^{|n|-1-2k}, negated for n < 0.
  LaurentPoly out;
  const long m = n < 0 ? -n : n;
  const Rational sign = n < 0 ? -1 : 1;
  for (long k = 0; k < m; ++k) out.add_term({static_cast<int>(level * (m - 1 - 2 * k)), 0, 0}, sign);
  return out;
}

Rational qint_at_one(long n, int level) { return qint(n, level).coefficient_sum(); }

bool qint_doubling_holds(long n) {
  return RationalFunction(qint(2 * n)) / RationalFunction(qint(2)) == RationalFunction(qint(n, 2));
}

std::string SymExponent::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](int c, const char* name) {
    if (c == 0) return;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? "-" : "+");
    }
    const int m = c < 0 ? -c : c;
    if (m != 1) os << m;
    os << name;
    first = false;
  };
  emit(ca, "a");
  emit(cb, "b");
  if (c0 != 0 || first) {
    if (!first) os << (c0 < 0 ? "-" : "+") << (c0 < 0 ? -c0 : c0);
    else os << c0;
  }
  return os.str();
}

std::string QBracket::to_string() const {
  std::string s = "[" + arg.to_string() + "]";
  if (level != 1) s += "_{q^" + std::to_string(level) + "}";
  return s;
}

namespace {

// Returns the canonical atom for X and the sign s with X - X^{-1} = s * atom.
// Canonical means the first nonzero exponent in the order A, B, q is positive.
std::pair<Atom, int> canonical_atom(const Atom& x) {
  for (size_t idx : {size_t{1}, size_t{2}, size_t{0}}) {
    if (x[idx] > 0) return {x, 1};
    if (x[idx] < 0) return {Atom{-x[0], -x[1], -x[2]}, -1};
  }
  throw DivisionByZero("degenerate atom 1 - 1");
}

LaurentPoly expand_atoms(const std::map<Atom, int>& atoms) {
  LaurentPoly out(1L);
  for (const auto& [x, p] : atoms) out *= atom_poly(x).pow(static_cast<unsigned>(p));
  return out;
}

}  // namespace

LaurentPoly atom_poly(const Atom& x) {
  LaurentPoly p = LaurentPoly::monomial(x);
  p.add_term({-x[0], -x[1], -x[2]}, -1);
  return p;
}

SymFraction::SymFraction(LaurentPoly num, std::map<Atom, int> den_atoms)
    : num_(std::move(num)), den_(std::move(den_atoms)) {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second < 0) throw std::invalid_argument("denominator atom powers must be positive");
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

LaurentPoly SymFraction::den() const { return expand_atoms(den_); }

std::pair<LaurentPoly, LaurentPoly> SymFraction::over_common_denominator(const SymFraction& x,
                                                                         const SymFraction& y) {
  std::map<Atom, int> missing_x, missing_y;
  for (const auto& [atom, p] : y.den_) {
    auto it = x.den_.find(atom);
    const int px = it == x.den_.end() ? 0 : it->second;
    if (p > px) missing_x[atom] = p - px;
  }
  for (const auto& [atom, p] : x.den_) {
    auto it = y.den_.find(atom);
    const int py = it == y.den_.end() ? 0 : it->second;
    if (p > py) missing_y[atom] = p - py;
  }
  return {x.num_ * expand_atoms(missing_x), y.num_ * expand_atoms(missing_y)};
}

SymFraction& SymFraction::operator+=(const SymFraction& o) {
  auto [nx, ny] = over_common_denominator(*this, o);
  for (const auto& [atom, p] : o.den_) {
    int& mine = den_[atom];
    if (p > mine) mine = p;
  }
  num_ = nx + ny;
  return *this;
}

SymFraction& SymFraction::operator-=(const SymFraction& o) { return *this += -o; }

SymFraction operator*(const SymFraction& x, const SymFraction& y) {
  std::map<Atom, int> den = x.den_;
  for (const auto& [atom, p] : y.den_) den[atom] += p;
  return SymFraction(x.num_ * y.num_, std::move(den));
}

bool equivalent(const SymFraction& x, const SymFraction& y) {
  auto [nx, ny] = SymFraction::over_common_denominator(x, y);
  return nx == ny;
}

BracketMonomial BracketMonomial::bracket(SymExponent e, int level, int power) {
  BracketMonomial m;
  m.mul_bracket({e, level}, power);
  return m;
}

void BracketMonomial::mul_bracket(QBracket b, int power) {
  if (power == 0 || is_zero()) return;
  if (b.level < 1) throw std::invalid_argument("bracket level must be positive");
  const SymExponent e = b.arg;
  const bool negative = e.ca < 0 || (e.ca == 0 && (e.cb < 0 || (e.cb == 0 && e.c0 < 0)));
  if (e == SymExponent{}) {
    if (power < 0) throw DivisionByZero("division by [0]");
    coeff_ = 0;
    factors_.clear();
    return;
  }
  if (negative) {
    b.arg = -e;
    if (power % 2 != 0) coeff_ = -coeff_;
  }
  int& p = factors_[b];
  p += power;
  if (p == 0) factors_.erase(b);
}

BracketMonomial BracketMonomial::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero bracket monomial");
  BracketMonomial m(Rational(1 / coeff_));
  for (const auto& [b, p] : factors_) m.factors_[b] = -p;
  return m;
}

BracketMonomial BracketMonomial::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  BracketMonomial m;
  for (int i = 0; i < n; ++i) m *= *this;
  return m;
}

BracketMonomial BracketMonomial::shifted(int da, int db) const {
  BracketMonomial m(coeff_);
  for (const auto& [b, p] : factors_) m.mul_bracket({b.arg.shifted(da, db), b.level}, p);
  return m;
}

BracketMonomial& BracketMonomial::operator*=(const BracketMonomial& o) {
  coeff_ *= o.coeff_;
  if (is_zero()) {
    factors_.clear();
    return *this;
  }
  for (const auto& [b, p] : o.factors_) mul_bracket(b, p);
  return *this;
}

BracketMonomial BracketMonomial::operator-() const {
  BracketMonomial m = *this;
  m.coeff_ = -m.coeff_;
  return m;
}

RationalFunction BracketMonomial::evaluate(int a, int b) const {
  if (is_zero()) return {};
  LaurentPoly num = LaurentPoly(coeff_), den(1L);
  for (const auto& [br, p] : factors_) {
    const int n = br.arg.evaluate(a, b);
    if (n == 0) {
      if (p < 0) throw DivisionByZero("bracket " + br.to_string() + " vanishes in a denominator");
      return {};
    }
    const LaurentPoly v = qint(n, br.level);
    if (p > 0) {
      num *= v.pow(static_cast<unsigned>(p));
    } else {
      den *= v.pow(static_cast<unsigned>(-p));
    }
  }
  return RationalFunction(num, den);
}

SymFraction BracketMonomial::realize() const {
  if (is_zero()) return {};
  LaurentPoly num = LaurentPoly(coeff_);
  std::map<Atom, int> net;
  for (const auto& [br, p] : factors_) {
    if (p > 0 && br.arg.is_constant()) {
      num *= qint(br.arg.c0, br.level).pow(static_cast<unsigned>(p));
      continue;
    }
    const int l = br.level;
    auto [top, sign] = canonical_atom({l * br.arg.c0, l * br.arg.ca, l * br.arg.cb});
    if (sign < 0 && p % 2 != 0) num = -num;
    net[top] += p;
    net[Atom{l, 0, 0}] -= p;
  }
  std::map<Atom, int> den;
  for (const auto& [atom, p] : net) {
    if (p > 0) num *= atom_poly(atom).pow(static_cast<unsigned>(p));
    if (p < 0) den[atom] = -p;
  }
  return SymFraction(std::move(num), std::move(den));
}

std::string BracketMonomial::to_string() const {
  if (is_zero()) return "0";
  std::string top, bottom;
  for (const auto& [b, p] : factors_) {
    std::string& dst = p > 0 ? top : bottom;
    const int m = p > 0 ? p : -p;
    dst += b.to_string();
    if (m != 1) dst += "^" + std::to_string(m);
  }
  std::ostringstream os;
  Rational c = coeff_;
  if (sgn(c) < 0) {
    os << '-';
    c = -c;
  }
  const bool unit = c == 1;
  if (!unit || top.empty()) os << c;
  os << top;
  if (!bottom.empty()) os << '/' << bottom;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BracketMonomial& m) { return os << m.to_string(); }

std::pair<LaurentPoly, LaurentPoly> sym_qint(SymExponent e, int level) {
  const Atom x{level * e.c0, level * e.ca, level * e.cb};
  LaurentPoly num = (x == Atom{0, 0, 0}) ? LaurentPoly() : atom_poly(x);
  return {std::move(num), atom_poly({level, 0, 0})};
}

std::pair<LaurentPoly, LaurentPoly> sym_qfraction(const SymFraction& f) { return {f.num(), f.den()}; }

}  // namespace claspkit
