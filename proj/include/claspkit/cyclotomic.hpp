#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "claspkit/int_poly.hpp"
#include "claspkit/laurent_poly.hpp"

namespace claspkit {

/// n-th cyclotomic polynomial as an integer polynomial. Thread-safe memo.
const IntPoly& cyclotomic_int_poly(int n);

/// n-th cyclotomic polynomial in the variable q.
LaurentPoly cyclotomic_poly(int n);

int euler_phi(int n);

/// Element of Q(zeta_n) where zeta_n is the residue class of x modulo the
/// n-th cyclotomic polynomial. Coefficients are on the power basis
/// 1, zeta, ..., zeta^(phi(n)-1); the representation is always reduced, so
/// the zero test is exact.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(int order);
  CyclotomicNumber(int order, std::vector<Rational> coeffs);

  /// Image of a univariate Laurent polynomial in q under q -> zeta_order.
  static CyclotomicNumber evaluate(const LaurentPoly& x, int order);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(CyclotomicNumber x, const CyclotomicNumber& y) { return x += y; }
  friend CyclotomicNumber operator-(CyclotomicNumber x, const CyclotomicNumber& y) { return x -= y; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y);
  friend bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    return x.order_ == y.order_ && x.coeffs_ == y.coeffs_;
  }

  std::string to_string() const;

 private:
  // Reduces a dense coefficient vector of arbitrary length mod Phi_order.
  static std::vector<Rational> reduce(std::vector<Rational> v, int order);

  int order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z);

/// q -> zeta with zeta a primitive 2*ell-th root of unity.
CyclotomicNumber cyc_eval(const LaurentPoly& x, int ell);

}  // namespace claspkit
