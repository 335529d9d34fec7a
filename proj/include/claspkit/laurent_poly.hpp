#pragma once

#include <array>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>

#include "claspkit/int_poly.hpp"

namespace claspkit {

/// Variables of the Laurent ring, in serialization order.
enum class Var : int { q = 0, A = 1, B = 2 };

inline constexpr int kNumVars = 3;

/// Exponent vector (q, A, B).
using Exponents = std::array<int, kNumVars>;

/// Exact Laurent polynomial in q, A, B with rational coefficients.
///
/// Terms are kept in a map ordered lexicographically on (q, A, B) exponents,
/// and zero coefficients are never stored, so structural equality is
/// mathematical equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  explicit LaurentPoly(const Rational& c);
  LaurentPoly(std::initializer_list<std::pair<const Exponents, Rational>> terms);

  static LaurentPoly monomial(const Exponents& e, const Rational& c = 1);
  static LaurentPoly q(int k = 1) { return monomial({k, 0, 0}); }
  static LaurentPoly A(int k = 1) { return monomial({0, k, 0}); }
  static LaurentPoly B(int k = 1) { return monomial({0, 0, k}); }

  /// Univariate polynomial in q: q^shift * p(q).
  static LaurentPoly from_q_poly(const IntPoly& p, int shift = 0);

  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool uses(Var v) const;
  bool is_univariate_q() const { return !uses(Var::A) && !uses(Var::B); }
  int min_exponent(Var v) const;
  int max_exponent(Var v) const;

  /// Value at q = A = B = 1.
  Rational coefficient_sum() const;

  /// q -> q^{-1}, A -> A^{-1}, B -> B^{-1}.
  LaurentPoly bar() const;

  /// Multiply by the monomial with exponents e.
  LaurentPoly shifted(const Exponents& e) const;

  LaurentPoly pow(unsigned n) const;

  void add_term(const Exponents& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Replaces var^k by q^(power * k). var must be A or B.
LaurentPoly substitute(const LaurentPoly& x, Var var, int power);

/// Splits a univariate-in-q polynomial as q^shift * p(q) / denom with p
/// integral, p(0) != 0 and denom > 0. Throws std::invalid_argument when x
/// involves A or B.
struct IntegralQForm {
  int shift = 0;
  IntPoly poly;
  Integer denom = 1;
};
IntegralQForm to_integral_q_form(const LaurentPoly& x);

}  // namespace claspkit
