#pragma once

#include <cmath>
#include <random>

#include "claspkit/laurent_poly.hpp"
#include "claspkit/rational_function.hpp"

namespace claspkit::testing {

inline double eval_at(const LaurentPoly& p, double q, double a = 1.0, double b = 1.0) {
  double s = 0;
  for (const auto& [e, c] : p.terms()) s += c.get_d() * std::pow(q, e[0]) * std::pow(a, e[1]) * std::pow(b, e[2]);
  return s;
}

inline double eval_at(const RationalFunction& f, double q) { return eval_at(f.num(), q) / eval_at(f.den(), q); }

// Balanced quantum integer at a real q.
inline double qn(int n, double q, int level = 1) {
  const double v = std::pow(q, level);
  return (std::pow(v, n) - std::pow(v, -n)) / (v - 1 / v);
}

inline bool close(double x, double y, double rel = 1e-9) {
  return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
}

// Random Laurent polynomial in the variables selected by `vars` (bit 0: q,
// bit 1: A, bit 2: B) with small integer-over-small-integer coefficients.
inline LaurentPoly random_laurent(std::mt19937& rng, int vars = 1, int terms = 4, int span = 3) {
  std::uniform_int_distribution<int> ex(-span, span);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    Exponents e{};
    for (int v = 0; v < kNumVars; ++v) e[static_cast<size_t>(v)] = (vars >> v & 1) ? ex(rng) : 0;
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

}  // namespace claspkit::testing
