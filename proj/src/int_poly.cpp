#include "claspkit/int_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace claspkit {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(int degree, const Integer& c) {
  std::vector<Integer> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (sgn(lead()) < 0) c = -c;
  return divexact(c);
}

IntPoly IntPoly::divexact(const Integer& c) const {
  IntPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& x : coeffs_) {
    Integer y;
    mpz_divexact(y.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    r.coeffs_.push_back(std::move(y));
  }
  r.trim();
  return r;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Integer> out(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < y.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x.coeffs_[i].get_mpz_t(), y.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

std::optional<IntPoly> try_divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("IntPoly division by zero");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quot(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const Integer& lb = b.lead();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = rem[static_cast<size_t>(k + db)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<size_t>(k + j)].get_mpz_t(), qk.get_mpz_t(), b[j].get_mpz_t());
    }
    quot[static_cast<size_t>(k)] = std::move(qk);
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("IntPoly pseudo-remainder by zero");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    for (auto& r : rem) r *= lb;
    Integer top = rem[static_cast<size_t>(k + db)];
    if (sgn(top) == 0) continue;
    mpz_divexact(top.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<size_t>(k + j)].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(rem));
}

namespace {

Integer max_norm(const IntPoly& p) {
  Integer m = 0;
  for (const auto& c : p.coeffs()) {
    Integer ac = abs(c);
    if (ac > m) m = ac;
  }
  return m;
}

// Recovers a polynomial from its value at xi using balanced xi-adic digits.
IntPoly from_balanced_digits(Integer h, const Integer& xi) {
  std::vector<Integer> out;
  const Integer half = xi / 2;
  while (sgn(h) != 0) {
    Integer d;
    mpz_fdiv_r(d.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    if (d > half) d -= xi;
    out.push_back(d);
    h -= d;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

// Heuristic gcd of primitive polynomials (Char, Geddes, Gonnet). The
// candidate is accepted only after exact trial division, so a wrong guess
// can cost time but never correctness.
std::optional<IntPoly> heuristic_gcd(const IntPoly& a, const IntPoly& b) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer ga = a.evaluate(xi);
    Integer gb = b.evaluate(xi);
    Integer h;
    mpz_gcd(h.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    IntPoly cand = from_balanced_digits(h, xi).primitive_part();
    if (!cand.is_zero() && try_divexact(a, cand) && try_divexact(b, cand)) return cand;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

IntPoly primitive_prs_gcd(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? IntPoly{} : (sgn(b.lead()) < 0 ? -b : b);
  if (b.is_zero()) return sgn(a.lead()) < 0 ? -a : a;
  Integer ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly pa = a.primitive_part(), pb = b.primitive_part();
  if (pa.degree() == 0 || pb.degree() == 0) return IntPoly::constant(cg);
  auto g = heuristic_gcd(pa, pb);
  IntPoly prim = g ? *g : primitive_prs_gcd(std::move(pa), std::move(pb));
  return prim * cg;
}

}  // namespace claspkit
