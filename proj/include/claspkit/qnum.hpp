#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "claspkit/laurent_poly.hpp"
#include "claspkit/rational_function.hpp"

namespace claspkit {

/// Balanced quantum integer [n]_{q^level} as a Laurent polynomial in q.
LaurentPoly qint(long n, int level = 1);

/// [n]_{q^level} at q = 1, computed as the coefficient sum. Equals n.
Rational qint_at_one(long n, int level = 1);

/// [2n] / [2] == [n]_{q^2} as rational functions.
bool qint_doubling_holds(long n);

/// Linear form ca*a + cb*b + c0 in two symbolic integers a, b.
struct SymExponent {
  int ca = 0;
  int cb = 0;
  int c0 = 0;

  constexpr int evaluate(int a, int b) const { return ca * a + cb * b + c0; }
  /// Same form after the substitution (a, b) -> (a + da, b + db).
  constexpr SymExponent shifted(int da, int db) const { return {ca, cb, c0 + ca * da + cb * db}; }
  constexpr SymExponent operator-() const { return {-ca, -cb, -c0}; }
  constexpr bool is_constant() const { return ca == 0 && cb == 0; }

  auto operator<=>(const SymExponent&) const = default;
  std::string to_string() const;
};

/// Quantum integer [e]_{q^level} with symbolic argument.
struct QBracket {
  SymExponent arg;
  int level = 1;

  auto operator<=>(const QBracket&) const = default;
  std::string to_string() const;
};

/// Balanced Laurent monomial X = A^i B^j q^k, used as the building block
/// X - X^{-1} of every quantum-integer numerator.
using Atom = Exponents;

/// An unreduced fraction over Z[A^{±1}, B^{±1}, q^{±1}] whose denominator is
/// kept factored as a product of atoms X - X^{-1}.
///
/// Keeping the denominator factored lets sums use the least common multiple
/// of the atom multisets, which keeps cleared identities at the size a person
/// would write them by hand.
class SymFraction {
 public:
  SymFraction() = default;
  explicit SymFraction(LaurentPoly num, std::map<Atom, int> den_atoms = {});

  const LaurentPoly& num() const { return num_; }
  const std::map<Atom, int>& den_atoms() const { return den_; }
  /// Denominator expanded to a Laurent polynomial.
  LaurentPoly den() const;

  bool is_zero() const { return num_.is_zero(); }

  SymFraction& operator+=(const SymFraction& o);
  SymFraction& operator-=(const SymFraction& o);
  friend SymFraction operator+(SymFraction x, const SymFraction& y) { return x += y; }
  friend SymFraction operator-(SymFraction x, const SymFraction& y) { return x -= y; }
  friend SymFraction operator*(const SymFraction& x, const SymFraction& y);
  SymFraction operator-() const { return SymFraction(-num_, den_); }

  /// Numerators of x and y over the lcm of their denominators.
  static std::pair<LaurentPoly, LaurentPoly> over_common_denominator(const SymFraction& x,
                                                                     const SymFraction& y);
  /// Equality by cross multiplication.
  friend bool equivalent(const SymFraction& x, const SymFraction& y);

 private:
  LaurentPoly num_;
  std::map<Atom, int> den_;
};

/// Realized atom X - X^{-1}.
LaurentPoly atom_poly(const Atom& x);

/// Rational constant times a product of quantum brackets with integer powers.
/// Canonical: brackets are sign-normalized (first nonzero of ca, cb, c0 is
/// positive) and zero powers are dropped.
class BracketMonomial {
 public:
  BracketMonomial() = default;
  BracketMonomial(long c) : coeff_(c) {}  // NOLINT: constants convert implicitly
  explicit BracketMonomial(const Rational& c) : coeff_(c) {}
  static BracketMonomial bracket(SymExponent e, int level = 1, int power = 1);
  /// Constant [n]_{q^level}^power.
  static BracketMonomial bracket(int n, int level = 1, int power = 1) {
    return bracket(SymExponent{0, 0, n}, level, power);
  }

  const Rational& coeff() const { return coeff_; }
  const std::map<QBracket, int>& factors() const { return factors_; }
  bool is_zero() const { return sgn(coeff_) == 0; }

  BracketMonomial inverse() const;
  BracketMonomial pow(int n) const;
  BracketMonomial shifted(int da, int db) const;

  BracketMonomial& operator*=(const BracketMonomial& o);
  friend BracketMonomial operator*(BracketMonomial x, const BracketMonomial& y) { return x *= y; }
  friend BracketMonomial operator/(const BracketMonomial& x, const BracketMonomial& y) {
    return x * y.inverse();
  }
  BracketMonomial operator-() const;
  friend bool operator==(const BracketMonomial&, const BracketMonomial&) = default;

  /// Concrete value at (a, b). Throws DivisionByZero when a bracket with a
  /// negative power evaluates to [0].
  RationalFunction evaluate(int a, int b) const;

  /// Symbolic realization with A = q^a and B = q^b. Constant brackets with a
  /// positive power are realized directly as Laurent polynomials; everything
  /// else goes through atoms so common factors cancel.
  SymFraction realize() const;

  std::string to_string() const;

 private:
  void mul_bracket(QBracket b, int power);

  Rational coeff_ = 1;
  std::map<QBracket, int> factors_;
};

std::ostream& operator<<(std::ostream& os, const BracketMonomial& m);

/// Symbolic quantum integer [e]_{q^level} as an unreduced (num, den) pair:
/// num = A^{l ca} B^{l cb} q^{l c0} - inverse, den = q^l - q^{-l}.
std::pair<LaurentPoly, LaurentPoly> sym_qint(SymExponent e, int level = 1);

/// (num, den) pair of an arbitrary symbolic fraction expression.
std::pair<LaurentPoly, LaurentPoly> sym_qfraction(const SymFraction& f);

}  // namespace claspkit
