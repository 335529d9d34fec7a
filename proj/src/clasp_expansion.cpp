#include "claspkit/clasp_expansion.hpp"

#include <string>

#include "claspkit/cyclotomic.hpp"
#include "claspkit/rep_combinatorics.hpp"

namespace claspkit {

std::vector<int> default_clasp_path(Weight target) {
  if (!target.dominant()) throw NotDominant("clasp target is not dominant: " + target.to_string());
  std::vector<int> path(static_cast<size_t>(target.a), 1);
  path.insert(path.end(), static_cast<size_t>(target.b), 2);
  return path;
}

ClaspExpansionCertificate expansion_certificate(Weight target) {
  return expansion_certificate(target, default_clasp_path(target));
}

ClaspExpansionCertificate expansion_certificate(Weight target, const std::vector<int>& path) {
  if (!target.dominant()) throw NotDominant("clasp target is not dominant: " + target.to_string());
  Weight sum{0, 0};
  for (int letter : path) {
    if (letter != 1 && letter != 2) throw BadPath("path letters must be 1 or 2");
    sum = sum + (letter == 1 ? kVarpi1 : kVarpi2);
  }
  if (sum != target) {
    throw BadPath("path sums to " + sum.to_string() + ", not " + target.to_string());
  }

  ClaspExpansionCertificate cert{target, path, {}};
  KappaTable table(KappaMode::kClosed);
  Weight lambda{0, 0};
  for (int letter : path) {
    const Weight top = letter == 1 ? kVarpi1 : kVarpi2;
    ExpansionStep step{lambda, letter, lambda + top, {}};
    for (Weight mu : s_set(lambda, letter)) {
      if (mu == top) continue;
      const RationalFunction k = kappa_value({lambda, mu}, table);
      step.corrections.push_back({mu, k, k.inverse(), lambda + mu});
    }
    cert.steps.push_back(std::move(step));
    lambda = lambda + top;
  }
  return cert;
}

ExistenceReport existence_report(const ClaspExpansionCertificate& cert, int ell) {
  if (ell < 3) throw std::invalid_argument("ell must be at least 3, got " + std::to_string(ell));
  ExistenceReport report{cert.target, ell, true, std::nullopt};
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    for (const auto& c : step.corrections) {
      const bool num_zero = cyc_eval(c.kappa.num(), ell).is_zero();
      const bool den_zero = cyc_eval(c.kappa.den(), ell).is_zero();
      if (num_zero || den_zero) {
        report.exists = false;
        report.failure = VanishingWitness{i, step.from, c.mu, num_zero, den_zero};
        return report;
      }
    }
  }
  return report;
}

ExistenceReport clasp_exists_at(Weight target, int ell) {
  return existence_report(expansion_certificate(target), ell);
}

ExistenceReport clasp_exists_at(Weight target, int ell, const std::vector<int>& path) {
  return existence_report(expansion_certificate(target, path), ell);
}

}  // namespace claspkit
