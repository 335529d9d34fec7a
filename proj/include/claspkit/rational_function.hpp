#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "claspkit/int_poly.hpp"
#include "claspkit/laurent_poly.hpp"

namespace claspkit {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Element of Q(q) in canonical form.
///
/// Stored as q^shift * num(q) / den(q) with num, den in Z[q] coprime,
/// den(0) != 0, lead(den) > 0 and the joint content of (num, den) equal to 1.
/// The zero function is num = 0, den = 1, shift = 0.
class RationalFunction {
 public:
  RationalFunction() : den_(IntPoly::constant(1)) {}
  RationalFunction(long c);  // NOLINT: constants convert implicitly
  explicit RationalFunction(const Rational& c);
  explicit RationalFunction(const LaurentPoly& num);
  /// Throws DivisionByZero when den is zero, std::invalid_argument when
  /// either argument involves A or B.
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  LaurentPoly num() const { return LaurentPoly::from_q_poly(num_, shift_); }
  LaurentPoly den() const { return LaurentPoly::from_q_poly(den_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent_poly() const { return den_.degree() == 0 && den_[0] == 1; }

  RationalFunction inverse() const;
  RationalFunction bar() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;

  friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
  friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
  friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
  friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.shift_ == y.shift_ && x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::string to_string() const;

 private:
  // Builds q^shift * n / d from integral data and canonicalizes.
  static RationalFunction make(int shift, IntPoly n, IntPoly d);
  void canonicalize();

  int shift_ = 0;
  IntPoly num_;
  IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// Equality by cross multiplication, independent of the canonical form.
bool cross_equal(const RationalFunction& x, const RationalFunction& y);

}  // namespace claspkit
