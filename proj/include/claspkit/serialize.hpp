#pragma once

#include <json.hpp>

#include <map>
#include <vector>

#include "claspkit/clasp_expansion.hpp"
#include "claspkit/cyclotomic.hpp"
#include "claspkit/kappa.hpp"
#include "claspkit/laurent_poly.hpp"
#include "claspkit/rational_function.hpp"
#include "claspkit/root_data.hpp"

namespace claspkit {

using json = nlohmann::json;

// LaurentPoly: [{exponents: [q, A, B], coeff_num: "n", coeff_den: "d"}, ...]
// in ascending lexicographic exponent order. RationalFunction: {num, den}.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);
json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const json& j);

json to_json(Weight w);
Weight weight_from_json(const json& j);

json to_json(const CyclotomicNumber& z);

/// Row of a kappa table.
struct KappaRecord {
  int a = 0;
  int b = 0;
  Weight mu;
  RationalFunction value;

  KappaKey key() const { return {{a, b}, mu}; }
  friend bool operator==(const KappaRecord&, const KappaRecord&) = default;
};

json to_json(const KappaRecord& r);
KappaRecord kappa_record_from_json(const json& j);

json to_json(const IdentityCertificate& c);
json to_json(const VerificationReport& r);
json to_json(const ClaspExpansionCertificate& c);
json to_json(const ExistenceReport& r);

/// Memo cache file: {"kappa": [records]}.
json kappa_table_to_json(const std::map<KappaKey, RationalFunction>& entries);
std::vector<KappaRecord> kappa_table_from_json(const json& j);

}  // namespace claspkit
