#include "claspkit/render.hpp"

#include <sstream>

#include "claspkit/cyclotomic.hpp"
#include "claspkit/qnum.hpp"

namespace claspkit {

namespace {

// Divides out Phi_d for d >= 3 as often as possible, accumulating sign * count
// into e. Returns the cofactor.
IntPoly strip_cyclotomics(IntPoly p, int sign, std::map<int, int>& e) {
  // phi(d) >= d / 6 for every d this search can reach.
  const int bound = 6 * p.degree() + 6;
  for (int d = 3; d <= bound && p.degree() > 0; ++d) {
    if (euler_phi(d) > p.degree()) continue;
    const IntPoly& phi = cyclotomic_int_poly(d);
    while (auto quo = try_divexact(p, phi)) {
      p = std::move(*quo);
      e[d] += sign;
    }
  }
  return p;
}

bool single_constant(const LaurentPoly& x, Rational& out) {
  if (x.terms().size() != 1) return false;
  const auto& [exp, c] = *x.terms().begin();
  if (exp != Exponents{0, 0, 0}) return false;
  out = c;
  return true;
}

void append_brackets(std::ostringstream& os, const std::map<int, int>& ex, bool positive) {
  for (auto it = ex.rbegin(); it != ex.rend(); ++it) {
    const int p = positive ? it->second : -it->second;
    if (p <= 0) continue;
    os << '[' << it->first << ']';
    if (p > 1) os << '^' << p;
  }
}

int factor_count(const std::map<int, int>& ex, bool positive) {
  int n = 0;
  for (const auto& [k, p] : ex) n += positive ? (p > 0) : (p < 0);
  return n;
}

}  // namespace

std::optional<BracketFactorization> bracket_factorization(const RationalFunction& f) {
  if (f.is_zero()) return std::nullopt;
  std::map<int, int> cyc;
  const IntPoly rn = strip_cyclotomics(to_integral_q_form(f.num()).poly, 1, cyc);
  const IntPoly rd = strip_cyclotomics(to_integral_q_form(f.den()).poly, -1, cyc);
  if (rn.degree() != 0 || rd.degree() != 0) return std::nullopt;

  // [n] = q^(1-n) * prod_{d | 2n, d >= 3} Phi_d, so peel off the largest d.
  BracketFactorization out;
  while (!cyc.empty()) {
    auto top = std::prev(cyc.end());
    if (top->second == 0) {
      cyc.erase(top);
      continue;
    }
    const int d = top->first;
    const int m = top->second;
    if (d % 2 != 0) return std::nullopt;
    out.exponents[d / 2] += m;
    for (int dd = 3; dd <= d; ++dd) {
      if (d % dd == 0) cyc[dd] -= m;
    }
  }

  RationalFunction product(1);
  for (const auto& [n, p] : out.exponents) {
    const RationalFunction b(qint(n));
    for (int i = 0; i < std::abs(p); ++i) product = p > 0 ? product * b : product / b;
  }
  const RationalFunction ratio = f / product;
  Rational n, d;
  if (!single_constant(ratio.num(), n) || !single_constant(ratio.den(), d)) return std::nullopt;
  out.constant = n / d;
  out.constant.canonicalize();
  return out;
}

std::string display(const RationalFunction& f) {
  if (f.is_zero()) return "0";
  const auto fac = bracket_factorization(f);
  if (!fac) return f.to_string();
  std::ostringstream os;
  Rational c = fac->constant;
  if (c < 0) {
    os << '-';
    c = -c;
  }
  const int nn = factor_count(fac->exponents, true);
  const int nd = factor_count(fac->exponents, false);
  if (nn == 0) {
    os << c.get_str();
  } else if (c != 1) {
    os << c.get_str() << '*';
  }
  append_brackets(os, fac->exponents, true);
  if (nd > 0) {
    os << '/';
    if (nd > 1) os << '(';
    append_brackets(os, fac->exponents, false);
    if (nd > 1) os << ')';
  }
  return os.str();
}

}  // namespace claspkit
