#include "claspkit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace claspkit {

const IntPoly& cyclotomic_int_poly(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  IntPoly p = IntPoly::monomial(n, 1) - IntPoly::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto quot = try_divexact(p, cyclotomic_int_poly(d));
    if (!quot) throw std::logic_error("cyclotomic division was not exact");
    p = std::move(*quot);
  }
  std::lock_guard lock(mu);
  return memo.emplace(n, std::move(p)).first->second;
}

LaurentPoly cyclotomic_poly(int n) { return LaurentPoly::from_q_poly(cyclotomic_int_poly(n)); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicNumber::CyclotomicNumber(int order)
    : order_(order), coeffs_(static_cast<size_t>(euler_phi(order))) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
}

CyclotomicNumber::CyclotomicNumber(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(reduce(std::move(coeffs), order)) {}

std::vector<Rational> CyclotomicNumber::reduce(std::vector<Rational> v, int order) {
  const IntPoly& phi = cyclotomic_int_poly(order);
  const int d = phi.degree();
  // phi is monic: x^d = -sum_{j<d} phi_j x^j.
  for (int k = static_cast<int>(v.size()) - 1; k >= d; --k) {
    const Rational top = v[static_cast<size_t>(k)];
    if (sgn(top) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (sgn(phi[j]) != 0) v[static_cast<size_t>(k - d + j)] -= top * phi[j];
    }
    v[static_cast<size_t>(k)] = 0;
  }
  v.resize(static_cast<size_t>(d));
  return v;
}

CyclotomicNumber CyclotomicNumber::evaluate(const LaurentPoly& x, int order) {
  if (!x.is_univariate_q()) throw std::invalid_argument("cyclotomic evaluation needs a polynomial in q");
  std::vector<Rational> dense(static_cast<size_t>(order));
  for (const auto& [e, c] : x.terms()) {
    int k = e[0] % order;
    if (k < 0) k += order;
    dense[static_cast<size_t>(k)] += c;
  }
  return CyclotomicNumber(order, std::move(dense));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  if (o.order_ != order_) throw std::invalid_argument("cyclotomic orders differ");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  if (o.order_ != order_) throw std::invalid_argument("cyclotomic orders differ");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber z = *this;
  for (auto& c : z.coeffs_) c = -c;
  return z;
}

CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y) {
  if (x.order_ != y.order_) throw std::invalid_argument("cyclotomic orders differ");
  if (x.coeffs_.empty()) return x;
  std::vector<Rational> prod(2 * x.coeffs_.size() - 1);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < y.coeffs_.size(); ++j) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return CyclotomicNumber(x.order_, std::move(prod));
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    Rational mag = abs(c);
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'z';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) { return os << z.to_string(); }

CyclotomicNumber cyc_eval(const LaurentPoly& x, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  return CyclotomicNumber::evaluate(x, 2 * ell);
}

}  // namespace claspkit
