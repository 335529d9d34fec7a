#include "claspkit/kappa.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "claspkit/rep_combinatorics.hpp"

namespace claspkit {

namespace {

BracketMonomial br(int ca, int cb, int c0, int level = 1) {
  return BracketMonomial::bracket(SymExponent{ca, cb, c0}, level);
}

BracketMonomial constant(int n) { return BracketMonomial::bracket(n); }

bool is_fundamental_dominant(Weight mu) { return mu == kVarpi1 || mu == kVarpi2; }

KappaFactor inv(int da, int db, Weight mu, int power = 1) { return {da, db, mu, -power}; }
KappaFactor val(int da, int db, Weight mu, int power = 1) { return {da, db, mu, power}; }

std::vector<Recursion> build_standard() {
  const Weight m11{-1, 1}, m2m1{2, -1}, m00{0, 0}, m1m1{1, -1}, mm10{-1, 0}, mm21{-2, 1}, m0m1{0, -1};
  std::vector<Recursion> r;
  // rr1
  r.push_back({1, m11, {{-constant(2), {}}, {-1, {inv(-1, 0, m11)}}}});
  // rr2
  r.push_back({2, m2m1, {{-(constant(4) / constant(2)), {}}, {-1, {inv(0, -1, m2m1)}}}});
  // rr3
  r.push_back({3,
               m00,
               {{constant(5) / constant(2), {}},
                {-1, {inv(-1, 0, m11), val(-2, 1, m2m1)}},
                {-1, {inv(-1, 0, m1m1)}}}});
  // rr4
  r.push_back({4,
               m1m1,
               {{constant(5) / constant(2), {}},
                {-1, {inv(0, -1, m2m1), val(2, -2, m11)}},
                {-(BracketMonomial::bracket(2, 1, -2)), {inv(0, -1, m00)}}}});
  // rr5
  r.push_back({5,
               mm10,
               {{-(constant(6) * constant(2) / constant(3)), {}},
                {-1, {inv(-1, 0, mm10)}},
                {-1, {inv(-1, 0, m11), val(-2, 1, m1m1)}},
                {-1, {inv(-1, 0, m1m1), val(0, -1, m11)}}}});
  // rr6, with -(-[2] - kappa^{-1}_{(a-2,b),(-1,1)}) * kappa_{(a-1,b),(-1,1)} / kappa_{(a-1,b),(-1,0)}
  // expanded into two terms.
  r.push_back({6,
               mm21,
               {{constant(5) / constant(2), {val(-1, 0, m11)}},
                {constant(2), {val(-1, 0, m11), inv(-1, 0, mm10)}},
                {1, {inv(-2, 0, m11), val(-1, 0, m11), inv(-1, 0, mm10)}},
                {-1, {val(-2, 1, m00), inv(-2, 0, m11, 2), inv(-1, 0, m11)}}}});
  // rr7
  r.push_back({7,
               m0m1,
               {{constant(6) * constant(5) / (constant(3) * constant(2)), {}},
                {-1, {inv(0, -1, m0m1)}},
                {-1, {val(2, -2, mm21), inv(0, -1, m2m1)}},
                {-1, {val(0, -1, m00), inv(0, -1, m00)}},
                {-1, {val(-2, 0, m2m1), inv(0, -1, mm21)}}}});
  return r;
}

struct Evaluator {
  KappaTable& table;
  const RecursionSystem& system;
  std::set<KappaKey> in_progress;

  RationalFunction get(const KappaKey& key) {
    if (!key.in_domain()) throw OutOfDomain("kappa outside its domain: " + key.to_string());
    if (is_fundamental_dominant(key.mu)) return 1;
    if (auto hit = table.find(key)) return *hit;
    if (!in_progress.insert(key).second) {
      throw CycleDetected("recursion revisits " + key.to_string());
    }
    const RationalFunction v = table.mode() == KappaMode::kClosed ? kappa_closed(key) : evaluate(key);
    in_progress.erase(key);
    table.store(key, v);
    return v;
  }

  RationalFunction evaluate(const KappaKey& key) {
    const Recursion& rec = system.for_mu(key.mu);
    RationalFunction sum;
    for (const auto& term : rec.terms) {
      // A factor kappa^{-1} outside the domain kills the whole term, so the
      // remaining factors are never evaluated.
      const bool vanishes = std::any_of(term.factors.begin(), term.factors.end(), [&](const KappaFactor& f) {
        return f.power < 0 && !KappaKey{key.lambda + Weight{f.da, f.db}, f.mu}.in_domain();
      });
      if (vanishes) continue;
      RationalFunction value = term.coefficient.evaluate(0, 0);
      for (const auto& f : term.factors) {
        RationalFunction k = get({key.lambda + Weight{f.da, f.db}, f.mu});
        if (f.power < 0) k = k.inverse();
        const int n = f.power < 0 ? -f.power : f.power;
        for (int i = 0; i < n; ++i) value *= k;
      }
      sum += value;
    }
    return sum;
  }
};

}  // namespace

bool KappaKey::in_domain() const { return in_s_set(lambda, mu); }

std::string KappaKey::to_string() const { return "(" + lambda.to_string() + "," + mu.to_string() + ")"; }

const std::vector<Weight>& recursion_weights() {
  static const std::vector<Weight> w{{-1, 1}, {2, -1}, {0, 0}, {1, -1}, {-1, 0}, {-2, 1}, {0, -1}};
  return w;
}

BracketMonomial kappa_closed_form(Weight mu) {
  if (is_fundamental_dominant(mu)) return 1;
  if (mu == Weight{-1, 1}) return -(br(1, 0, 1) / br(1, 0, 0));
  if (mu == Weight{2, -1}) return -(br(0, 2, 2) / br(0, 2, 0));
  if (mu == Weight{0, 0}) return br(1, 0, 2) * br(1, 2, 4) / (constant(2) * br(1, 0, 0) * br(1, 2, 2));
  if (mu == Weight{1, -1}) return br(1, 2, 3) * br(0, 2, 2) / (br(1, 2, 2) * br(0, 2, 0));
  if (mu == Weight{-2, 1}) return -(br(1, 0, 1) * br(2, 2, 4) / (br(1, 0, -1) * br(2, 2, 2)));
  if (mu == Weight{-1, 0}) {
    return -(br(2, 2, 4) * br(1, 2, 3) * br(1, 0, 1) / (br(2, 2, 2) * br(1, 2, 2) * br(1, 0, 0)));
  }
  if (mu == Weight{0, -1}) {
    return br(2, 2, 4) * br(1, 2, 3) * br(0, 2, 2) / (br(2, 2, 2) * br(1, 2, 1) * br(0, 2, 0));
  }
  throw UnknownWeight("not a weight of V(w1) or V(w2): " + mu.to_string());
}

RationalFunction kappa_closed(const KappaKey& key) {
  if (!key.in_domain()) throw OutOfDomain("kappa outside its domain: " + key.to_string());
  return kappa_closed_form(key.mu).evaluate(key.lambda.a, key.lambda.b);
}

const RecursionSystem& RecursionSystem::standard() {
  static const RecursionSystem sys(build_standard());
  return sys;
}

RecursionSystem::RecursionSystem(std::vector<Recursion> recursions) : recursions_(std::move(recursions)) {}

const Recursion& RecursionSystem::by_id(int id) const {
  for (const auto& r : recursions_) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("no recursion with id " + std::to_string(id));
}

const Recursion& RecursionSystem::for_mu(Weight mu) const {
  for (const auto& r : recursions_) {
    if (r.mu == mu) return r;
  }
  throw UnknownWeight("no recursion for weight " + mu.to_string());
}

RecursionSystem RecursionSystem::perturbed(int id, const Rational& factor) const {
  RecursionSystem copy = *this;
  for (auto& r : copy.recursions_) {
    if (r.id == id) r.terms.front().coefficient *= BracketMonomial(factor);
  }
  return copy;
}

std::optional<RationalFunction> KappaTable::find(const KappaKey& key) const {
  std::shared_lock lock(mu_);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  return std::nullopt;
}

void KappaTable::store(const KappaKey& key, const RationalFunction& value) {
  if (!key.in_domain()) throw OutOfDomain("refusing to store kappa outside its domain: " + key.to_string());
  std::unique_lock lock(mu_);
  memo_.insert_or_assign(key, value);
}

size_t KappaTable::size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

std::map<KappaKey, RationalFunction> KappaTable::snapshot() const {
  std::shared_lock lock(mu_);
  return memo_;
}

RationalFunction kappa_recursive(const KappaKey& key, KappaTable& table, const RecursionSystem& system) {
  if (table.mode() != KappaMode::kRecursive) throw std::invalid_argument("table is not in recursive mode");
  return Evaluator{table, system, {}}.get(key);
}

RationalFunction kappa_value(const KappaKey& key, KappaTable& table, const RecursionSystem& system) {
  return Evaluator{table, system, {}}.get(key);
}

RationalFunction kappa_inv(const KappaKey& key, KappaTable& table, const RecursionSystem& system) {
  if (!key.in_domain()) return {};
  return kappa_value(key, table, system).inverse();
}

RationalFunction kappa_inv(const KappaKey& key) {
  if (!key.in_domain()) return {};
  return kappa_closed(key).inverse();
}

VerificationReport verify_recursion_numeric(int a_max, int b_max, const RecursionSystem& system,
                                            size_t max_mismatches) {
  if (a_max < 0 || b_max < 0) throw std::invalid_argument("grid bounds must be nonnegative");
  VerificationReport report;
  report.a_max = a_max;
  report.b_max = b_max;
  KappaTable table(KappaMode::kRecursive);
  for (int a = 0; a <= a_max; ++a) {
    for (int b = 0; b <= b_max; ++b) {
      for (Weight mu : recursion_weights()) {
        const KappaKey key{{a, b}, mu};
        if (!key.in_domain()) {
          ++report.skipped;
          continue;
        }
        ++report.comparisons;
        if (kappa_recursive(key, table, system) == kappa_closed(key)) continue;
        report.mismatches.push_back(key);
        if (report.mismatches.size() >= max_mismatches) {
          report.truncated = true;
          return report;
        }
      }
    }
  }
  return report;
}

IdentityCertificate certify_recursion(int which, const RecursionSystem& system) {
  const Recursion& rec = system.by_id(which);
  IdentityCertificate cert;
  cert.recursion_id = which;
  cert.mu = rec.mu;

  const BracketMonomial lhs = kappa_closed_form(rec.mu);
  cert.lhs_expr = lhs.to_string();

  SymFraction rhs;
  std::ostringstream rhs_expr;
  bool first = true;
  for (const auto& term : rec.terms) {
    BracketMonomial m = term.coefficient;
    for (const auto& f : term.factors) m *= kappa_closed_form(f.mu).shifted(f.da, f.db).pow(f.power);
    rhs += m.realize();
    const std::string s = m.to_string();
    if (!first && s.front() != '-') rhs_expr << " + ";
    if (!first && s.front() == '-') rhs_expr << " ";
    rhs_expr << s;
    first = false;
  }
  cert.rhs_expr = rhs_expr.str();

  auto [l, r] = SymFraction::over_common_denominator(lhs.realize(), rhs);
  cert.lhs = std::move(l);
  cert.rhs = std::move(r);
  cert.difference = cert.lhs - cert.rhs;
  return cert;
}

IdentityCertificate verify_recursion_symbolic(int which, const RecursionSystem& system) {
  IdentityCertificate cert = certify_recursion(which, system);
  if (!cert.ok()) {
    throw IdentityFailed("recursion " + std::to_string(which) + " is not solved by its closed form",
                         cert.difference);
  }
  return cert;
}

const std::vector<Weight>& extremal_weights() {
  static const std::vector<Weight> w{{1, 0}, {-1, 1}, {1, -1}, {-1, 0}, {0, 1}, {2, -1}, {-2, 1}, {0, -1}};
  return w;
}

BracketMonomial corollary_bracket(Weight varpi) {
  BracketMonomial m;
  for (const auto& alpha : phi_set(varpi)) {
    // (alpha^vee, (a,b) + rho) as a linear form in a, b.
    const Eigen::Vector2i c = alpha.coroot();
    const SymExponent top{c(0), c(0) + c(1), pairing(alpha, kRho)};
    const SymExponent bottom{top.ca, top.cb, top.c0 + pairing(alpha, varpi)};
    m *= BracketMonomial::bracket(top, alpha.level()) / BracketMonomial::bracket(bottom, alpha.level());
  }
  return m;
}

int corollary_sign(Weight varpi) {
  static const std::map<Weight, int> table{
      {{1, 0}, 1},   {{0, 1}, 1},   {{-1, 1}, -1}, {{2, -1}, -1},
      {{-2, 1}, -1}, {{-1, 0}, -1}, {{1, -1}, 1},  {{0, -1}, 1},
  };
  auto it = table.find(varpi);
  if (it == table.end()) throw UnknownWeight("not an extremal fundamental weight: " + varpi.to_string());
  return it->second;
}

int derive_corollary_sign(Weight varpi) {
  const Weight lambda{3, 3};
  const RationalFunction ratio =
      kappa_closed({lambda, varpi}) / corollary_bracket(varpi).evaluate(lambda.a, lambda.b);
  if (ratio == RationalFunction(1L)) return 1;
  if (ratio == RationalFunction(-1L)) return -1;
  throw std::logic_error("product formula differs from the closed form by more than a sign at " +
                         varpi.to_string());
}

CorollaryValue corollary_product(Weight lambda, Weight varpi) {
  if (!lambda.dominant()) throw NotDominant("weight is not dominant: " + lambda.to_string());
  const int sign = corollary_sign(varpi);
  if (!(lambda + varpi).dominant()) {
    throw OutOfDomain("lambda + varpi is not dominant: " + KappaKey{lambda, varpi}.to_string());
  }
  for (const auto& alpha : phi_set(varpi)) {
    if (pairing(alpha, lambda + varpi + kRho) <= 0) {
      throw OutOfDomain("nonpositive pairing in the product formula at " + KappaKey{lambda, varpi}.to_string());
    }
  }
  return {corollary_bracket(varpi).evaluate(lambda.a, lambda.b), sign};
}

bool verify_corollary_symbolic(Weight varpi) {
  const BracketMonomial signed_product = corollary_bracket(varpi) * BracketMonomial(corollary_sign(varpi));
  return equivalent(signed_product.realize(), kappa_closed_form(varpi).realize());
}

VerificationReport verify_corollary_numeric(int a_max, int b_max) {
  if (a_max < 0 || b_max < 0) throw std::invalid_argument("grid bounds must be nonnegative");
  VerificationReport report;
  report.a_max = a_max;
  report.b_max = b_max;
  for (int a = 0; a <= a_max; ++a) {
    for (int b = 0; b <= b_max; ++b) {
      for (Weight varpi : extremal_weights()) {
        const KappaKey key{{a, b}, varpi};
        if (!key.in_domain()) {
          ++report.skipped;
          continue;
        }
        ++report.comparisons;
        try {
          if (!(corollary_product(key.lambda, varpi).signed_value() == kappa_closed(key))) {
            report.mismatches.push_back(key);
          }
        } catch (const OutOfDomain&) {
          report.mismatches.push_back(key);
        }
      }
    }
  }
  return report;
}

namespace {

// X - X^-1 for X = q^k A^i B^j.
LaurentPoly diff_atom(int k, int i, int j) {
  return LaurentPoly::monomial({k, i, j}, 1) - LaurentPoly::monomial({-k, -i, -j}, 1);
}

}  // namespace

IdentityCertificate cleared_identity(Weight mu) {
  IdentityCertificate cert;
  cert.mu = mu;
  const LaurentPoly q2 = LaurentPoly::q(1) + LaurentPoly::q(-1);
  if (mu == Weight{-1, 1}) {
    cert.recursion_id = 1;
    cert.lhs_expr = "-(A*q - A^-1*q^-1)";
    cert.rhs_expr = "-(q + q^-1)*(A - A^-1) + (A*q^-1 - A^-1*q)";
    cert.lhs = -diff_atom(1, 1, 0);
    cert.rhs = -(q2 * diff_atom(0, 1, 0)) + diff_atom(-1, 1, 0);
  } else if (mu == Weight{0, 0}) {
    cert.recursion_id = 3;
    const LaurentPoly q5 = LaurentPoly::q(4) + LaurentPoly::q(2) + 1 + LaurentPoly::q(-2) + LaurentPoly::q(-4);
    cert.lhs_expr = "(A*q^2 - A^-1*q^-2)*(B^2*q^2 - B^-2*q^-2)*(A*B^2*q^4 - A^-1*B^-2*q^-4)";
    cert.rhs_expr =
        "(q^4 + q^2 + 1 + q^-2 + q^-4)*(A - A^-1)*(B^2*q^2 - B^-2*q^-2)*(A*B^2*q^2 - A^-1*B^-2*q^-2)"
        " - (q + q^-1)*(A*q^-1 - A^-1*q)*(B^2*q^4 - B^-2*q^-4)*(A*B^2*q^2 - A^-1*B^-2*q^-2)"
        " - (q + q^-1)*(A - A^-1)*(B^2 - B^-2)*(A*B^2*q - A^-1*B^-2*q^-1)";
    cert.lhs = diff_atom(2, 1, 0) * diff_atom(2, 0, 2) * diff_atom(4, 1, 2);
    cert.rhs = q5 * diff_atom(0, 1, 0) * diff_atom(2, 0, 2) * diff_atom(2, 1, 2) -
               q2 * diff_atom(-1, 1, 0) * diff_atom(4, 0, 2) * diff_atom(2, 1, 2) -
               q2 * diff_atom(0, 1, 0) * diff_atom(0, 0, 2) * diff_atom(1, 1, 2);
  } else {
    throw UnknownWeight("no hand-cleared identity for " + mu.to_string());
  }
  cert.difference = cert.lhs - cert.rhs;
  return cert;
}

}  // namespace claspkit
