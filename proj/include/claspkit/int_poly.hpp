#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace claspkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over the integers, coefficient i is the x^i
/// coefficient. Always trimmed: the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly constant(const Integer& c);
  static IntPoly monomial(int degree, const Integer& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& lead() const { return coeffs_.back(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const;
  IntPoly primitive_part() const;
  Integer evaluate(const Integer& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly x, const IntPoly& y) { return x += y; }
  friend IntPoly operator-(IntPoly x, const IntPoly& y) { return x -= y; }
  friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
  friend IntPoly operator*(IntPoly x, const Integer& c) { return x *= c; }
  friend bool operator==(const IntPoly& x, const IntPoly& y) { return x.coeffs_ == y.coeffs_; }

  /// Divides every coefficient by c; c must divide all of them.
  IntPoly divexact(const Integer& c) const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Quotient a / b when it exists in Z[x], otherwise nullopt.
std::optional<IntPoly> try_divexact(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// gcd in Z[x], positive leading coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace claspkit
