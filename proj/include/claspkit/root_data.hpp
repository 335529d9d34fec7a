#pragma once

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace claspkit {

/// Weight a*w1 + b*w2 of the C2 weight lattice.
struct Weight {
  int a = 0;
  int b = 0;

  constexpr bool dominant() const { return a >= 0 && b >= 0; }
  constexpr Weight operator+(Weight o) const { return {a + o.a, b + o.b}; }
  constexpr Weight operator-(Weight o) const { return {a - o.a, b - o.b}; }
  constexpr Weight operator-() const { return {-a, -b}; }
  auto operator<=>(const Weight&) const = default;

  Eigen::Vector2i coords() const { return {a, b}; }
  /// epsilon-coordinates: w1 = e1, w2 = e1 + e2.
  Eigen::Vector2i epsilon() const { return {a + b, b}; }
  static Weight from_epsilon(const Eigen::Vector2i& e) { return {e(0) - e(1), e(1)}; }

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, Weight w);

inline constexpr Weight kVarpi1{1, 0};
inline constexpr Weight kVarpi2{0, 1};
inline constexpr Weight kRho{1, 1};

struct NotDominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnknownWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class RootLength { kShort, kLong };

/// Root in epsilon-coordinates.
struct Root {
  Eigen::Vector2i eps;

  int norm2() const { return eps.squaredNorm(); }
  RootLength length_class() const { return norm2() == 2 ? RootLength::kShort : RootLength::kLong; }
  /// l(alpha): 1 for short roots, 2 for long roots.
  int level() const { return length_class() == RootLength::kShort ? 1 : 2; }
  /// alpha^vee = 2 alpha / (alpha, alpha), integral for C2.
  Eigen::Vector2i coroot() const { return 2 * eps / norm2(); }
  bool positive() const { return eps(0) > 0 || (eps(0) == 0 && eps(1) > 0); }

  bool operator==(const Root& o) const { return eps == o.eps; }
  std::string to_string() const;
};

/// Simple roots alpha_s = e1 - e2 (short) and alpha_t = 2 e2 (long).
Root alpha_s();
Root alpha_t();
/// Positive roots in the order alpha_1, alpha_2, alpha_1 + alpha_2, 2 alpha_1 + alpha_2.
const std::vector<Root>& positive_roots();

/// (alpha^vee, x) for a root alpha and weight x.
int pairing(const Root& alpha, Weight x);

/// Weyl group element, identified by its action matrix on (a, b) coordinates.
class WeylElement {
 public:
  WeylElement() : m_(Eigen::Matrix2i::Identity()) {}
  static WeylElement s();
  static WeylElement t();
  static WeylElement from_word(const std::string& word);

  const Eigen::Matrix2i& matrix() const { return m_; }
  /// Action on epsilon-coordinates.
  Eigen::Matrix2i epsilon_matrix() const;

  Weight act(Weight x) const;
  Root act(const Root& r) const;

  /// Reduced word, found by breadth-first search from the identity.
  /// Composition is left to right as written: "st" means s(t(x)).
  std::string reduced_word() const;
  int length() const { return static_cast<int>(reduced_word().size()); }

  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    WeylElement w;
    w.m_ = x.m_ * y.m_;
    return w;
  }
  bool operator==(const WeylElement& o) const { return m_ == o.m_; }

 private:
  explicit WeylElement(const Eigen::Matrix2i& m) : m_(m) {}
  Eigen::Matrix2i m_;
};

Weight weyl_act(const WeylElement& w, Weight x);

/// All eight elements in breadth-first (length) order.
const std::vector<WeylElement>& weyl_group();

/// mu <= lambda iff lambda - mu is a nonnegative integer combination of the
/// simple roots.
bool dominance_leq(Weight mu, Weight lambda);

/// The nine weights of V(w1) and V(w2).
const std::vector<Weight>& fundamental_weights_all();

/// Minimal-length w with w(varpi) dominant. Throws UnknownWeight unless
/// varpi is one of the nine fundamental-representation weights.
WeylElement d_min(Weight varpi);

/// { alpha > 0 : d_min(varpi)(alpha) < 0 }.
std::vector<Root> phi_set(Weight varpi);

}  // namespace claspkit
