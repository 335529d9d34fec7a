#pragma once

#include <map>
#include <optional>
#include <string>

#include "claspkit/rational_function.hpp"

namespace claspkit {

/// Exact factorization c * prod [n]^{e_n} of a rational function, when one
/// exists. Exponents are keyed by n >= 2.
struct BracketFactorization {
  Rational constant = 1;
  std::map<int, int> exponents;
};

std::optional<BracketFactorization> bracket_factorization(const RationalFunction& f);

/// "-[6][2]/[3]" style text when a bracket factorization exists, otherwise
/// the raw polynomial quotient.
std::string display(const RationalFunction& f);

}  // namespace claspkit
