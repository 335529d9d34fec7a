#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "claspkit/kappa.hpp"
#include "claspkit/rational_function.hpp"
#include "claspkit/root_data.hpp"

namespace claspkit {

struct BadPath : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One correction term -kappa^{-1} DE o E of the triple clasp recursion.
struct CorrectionRecord {
  Weight mu;
  RationalFunction kappa;
  RationalFunction kappa_inv;
  Weight child;  // lambda' + mu
};

/// C_{from + w_letter} = C_from (x) id_letter - sum of corrections.
struct ExpansionStep {
  Weight from;
  int letter = 1;
  Weight to;
  std::vector<CorrectionRecord> corrections;
};

struct ClaspExpansionCertificate {
  Weight target;
  std::vector<int> path;
  std::vector<ExpansionStep> steps;
};

/// a steps of w1 then b steps of w2.
std::vector<int> default_clasp_path(Weight target);

ClaspExpansionCertificate expansion_certificate(Weight target);
/// Throws BadPath when the letters are not 1/2 or do not sum to target.
ClaspExpansionCertificate expansion_certificate(Weight target, const std::vector<int>& path);

struct VanishingWitness {
  size_t step = 0;
  Weight lambda;
  Weight mu;
  bool numerator_vanishes = false;
  bool denominator_vanishes = false;
};

struct ExistenceReport {
  Weight target;
  int ell = 0;
  bool exists = true;
  std::optional<VanishingWitness> failure;
};

/// Evaluates every kappa of the certificate at a primitive 2*ell-th root of
/// unity; the clasp exists there iff none has a vanishing numerator or
/// denominator. Reports the first failure along the path.
ExistenceReport existence_report(const ClaspExpansionCertificate& cert, int ell);
ExistenceReport clasp_exists_at(Weight target, int ell);
ExistenceReport clasp_exists_at(Weight target, int ell, const std::vector<int>& path);

}  // namespace claspkit
