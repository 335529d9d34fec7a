#include "claspkit/serialize.hpp"

#include <stdexcept>

#include "claspkit/render.hpp"

namespace claspkit {

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back({{"exponents", {e[0], e[1], e[2]}},
                   {"coeff_num", c.get_num().get_str()},
                   {"coeff_den", c.get_den().get_str()}});
  }
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("LaurentPoly json must be an array of terms");
  LaurentPoly p;
  for (const auto& t : j) {
    const auto& ex = t.at("exponents");
    if (!ex.is_array() || ex.size() != kNumVars) throw std::invalid_argument("exponents must have 3 entries");
    Exponents e{ex[0].get<int>(), ex[1].get<int>(), ex[2].get<int>()};
    Rational c(Integer(t.at("coeff_num").get<std::string>()), Integer(t.at("coeff_den").get<std::string>()));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RationalFunction rational_function_from_json(const json& j) {
  return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(Weight w) { return json::array({w.a, w.b}); }

Weight weight_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("weight json must be [a, b]");
  return {j[0].get<int>(), j[1].get<int>()};
}

json to_json(const CyclotomicNumber& z) {
  json coeffs = json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(c.get_str());
  return {{"order", z.order()}, {"coeffs", coeffs}, {"is_zero", z.is_zero()}};
}

json to_json(const KappaRecord& r) {
  return {{"a", r.a}, {"b", r.b}, {"mu", to_json(r.mu)}, {"value", to_json(r.value)}};
}

KappaRecord kappa_record_from_json(const json& j) {
  return {j.at("a").get<int>(), j.at("b").get<int>(), weight_from_json(j.at("mu")),
          rational_function_from_json(j.at("value"))};
}

json to_json(const IdentityCertificate& c) {
  return {{"recursion_id", c.recursion_id},
          {"mu", to_json(c.mu)},
          {"stratum", c.stratum},
          {"lhs_expr", c.lhs_expr},
          {"rhs_expr", c.rhs_expr},
          {"lhs", to_json(c.lhs)},
          {"rhs", to_json(c.rhs)},
          {"difference", to_json(c.difference)},
          {"status", c.ok() ? "verified" : "failed"}};
}

json to_json(const VerificationReport& r) {
  json mism = json::array();
  for (const auto& k : r.mismatches) mism.push_back({{"lambda", to_json(k.lambda)}, {"mu", to_json(k.mu)}});
  return {{"a_max", r.a_max},     {"b_max", r.b_max},   {"comparisons", r.comparisons},
          {"skipped", r.skipped}, {"mismatches", mism}, {"truncated", r.truncated},
          {"status", r.ok() ? "verified" : "failed"}};
}

json to_json(const ClaspExpansionCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    json corr = json::array();
    for (const auto& r : s.corrections) {
      corr.push_back({{"mu", to_json(r.mu)},
                      {"child", to_json(r.child)},
                      {"kappa", to_json(r.kappa)},
                      {"kappa_display", display(r.kappa)},
                      {"kappa_inv", to_json(r.kappa_inv)},
                      {"kappa_inv_display", display(r.kappa_inv)}});
    }
    steps.push_back({{"from", to_json(s.from)}, {"letter", s.letter}, {"to", to_json(s.to)}, {"corrections", corr}});
  }
  return {{"target", to_json(c.target)}, {"path", c.path}, {"steps", steps}};
}

json to_json(const ExistenceReport& r) {
  json out{{"target", to_json(r.target)}, {"ell", r.ell}, {"exists", r.exists}};
  if (r.failure) {
    out["failure"] = {{"step", r.failure->step},
                      {"lambda", to_json(r.failure->lambda)},
                      {"mu", to_json(r.failure->mu)},
                      {"numerator_vanishes", r.failure->numerator_vanishes},
                      {"denominator_vanishes", r.failure->denominator_vanishes}};
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

json kappa_table_to_json(const std::map<KappaKey, RationalFunction>& entries) {
  json rows = json::array();
  for (const auto& [k, v] : entries) rows.push_back(to_json(KappaRecord{k.lambda.a, k.lambda.b, k.mu, v}));
  return {{"kappa", rows}};
}

std::vector<KappaRecord> kappa_table_from_json(const json& j) {
  std::vector<KappaRecord> out;
  for (const auto& r : j.at("kappa")) out.push_back(kappa_record_from_json(r));
  return out;
}

}  // namespace claspkit
