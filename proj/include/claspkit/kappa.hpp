#pragma once

#include <cstdint>

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "claspkit/laurent_poly.hpp"
#include "claspkit/qnum.hpp"
#include "claspkit/rational_function.hpp"
#include "claspkit/root_data.hpp"

namespace claspkit {

struct OutOfDomain : std::domain_error {
  using std::domain_error::domain_error;
};
struct CycleDetected : std::logic_error {
  using std::logic_error::logic_error;
};

/// Index of a local intersection form kappa_{lambda, mu}.
struct KappaKey {
  Weight lambda;
  Weight mu;

  auto operator<=>(const KappaKey&) const = default;
  /// mu is in S_{lambda, a} for its fundamental index a.
  bool in_domain() const;
  std::string to_string() const;
};

/// The seven non-dominant weights of V(w1) and V(w2), in recursion order
/// rr1..rr7: (-1,1), (2,-1), (0,0), (1,-1), (-1,0), (-2,1), (0,-1).
const std::vector<Weight>& recursion_weights();

/// Closed form of kappa_{(a,b), mu} as a bracket monomial in symbolic a, b.
/// Dominant mu gives 1. Throws UnknownWeight for other mu.
BracketMonomial kappa_closed_form(Weight mu);

/// Closed-form value. Throws OutOfDomain when mu is not in S_lambda.
RationalFunction kappa_closed(const KappaKey& key);

// ---------------------------------------------------------------------------
// Recursion system

/// kappa_{lambda + (da, db), mu}^power inside a recursion term. Negative
/// powers are powers of kappa^{-1}, which is zero outside the domain.
struct KappaFactor {
  int da = 0;
  int db = 0;
  Weight mu;
  int power = 1;
};

/// coefficient * prod factors.
struct RecursionTerm {
  BracketMonomial coefficient;
  std::vector<KappaFactor> factors;
};

/// kappa_{(a,b), mu} = sum of terms.
struct Recursion {
  int id = 0;
  Weight mu;
  std::vector<RecursionTerm> terms;
};

/// The seven defining recursions, each quotient X / kappa written as
/// kappa^{-1} * X.
class RecursionSystem {
 public:
  static const RecursionSystem& standard();
  explicit RecursionSystem(std::vector<Recursion> recursions);

  const std::vector<Recursion>& recursions() const { return recursions_; }
  const Recursion& by_id(int id) const;
  const Recursion& for_mu(Weight mu) const;

  /// Copy with the leading constant of recursion `id` multiplied by factor;
  /// used by negative controls to show the verifiers can fail.
  RecursionSystem perturbed(int id, const Rational& factor) const;

 private:
  std::vector<Recursion> recursions_;
};

enum class KappaMode { kClosed, kRecursive };

/// Memoized kappa values. Concurrent lookups take a shared lock; inserts take
/// an exclusive one. Keys outside the domain are never stored.
class KappaTable {
 public:
  explicit KappaTable(KappaMode mode = KappaMode::kRecursive) : mode_(mode) {}
  KappaTable(const KappaTable&) = delete;
  KappaTable& operator=(const KappaTable&) = delete;

  KappaMode mode() const { return mode_; }
  std::optional<RationalFunction> find(const KappaKey& key) const;
  /// Throws OutOfDomain for keys outside the domain.
  void store(const KappaKey& key, const RationalFunction& value);
  size_t size() const;
  std::map<KappaKey, RationalFunction> snapshot() const;

 private:
  KappaMode mode_;
  mutable std::shared_mutex mu_;
  std::map<KappaKey, RationalFunction> memo_;
};

/// Value from the recursion with memoization in `table`.
RationalFunction kappa_recursive(const KappaKey& key, KappaTable& table,
                                 const RecursionSystem& system = RecursionSystem::standard());

/// Value in the table's mode (closed forms are memoized too).
RationalFunction kappa_value(const KappaKey& key, KappaTable& table,
                             const RecursionSystem& system = RecursionSystem::standard());

/// 0 outside the domain, otherwise 1 / kappa in the table's mode.
RationalFunction kappa_inv(const KappaKey& key, KappaTable& table,
                           const RecursionSystem& system = RecursionSystem::standard());
/// Closed-form mode without a caller-owned table.
RationalFunction kappa_inv(const KappaKey& key);

// ---------------------------------------------------------------------------
// Verification

struct VerificationReport {
  int a_max = 0;
  int b_max = 0;
  long comparisons = 0;
  long skipped = 0;  // keys outside the domain
  std::vector<KappaKey> mismatches;
  bool truncated = false;  // stopped early after max_mismatches
  bool ok() const { return mismatches.empty(); }
};

/// kappa_recursive == kappa_closed on every in-domain key with
/// 0 <= a <= a_max, 0 <= b <= b_max and mu non-dominant. A broken system
/// makes degrees explode further out, so the sweep stops once
/// max_mismatches keys have failed.
VerificationReport verify_recursion_numeric(int a_max, int b_max,
                                            const RecursionSystem& system = RecursionSystem::standard(),
                                            size_t max_mismatches = SIZE_MAX);

/// Cleared polynomial identity obtained by substituting the closed forms into
/// one recursion, with a and b symbolic (A = q^a, B = q^b).
struct IdentityCertificate {
  int recursion_id = 0;
  Weight mu;
  std::string stratum = "generic";
  std::string lhs_expr;
  std::string rhs_expr;
  LaurentPoly lhs;
  LaurentPoly rhs;
  LaurentPoly difference;
  bool ok() const { return difference.is_zero(); }
};

struct IdentityFailed : std::runtime_error {
  IdentityFailed(const std::string& what, LaurentPoly diff)
      : std::runtime_error(what), difference(std::move(diff)) {}
  LaurentPoly difference;
};

/// Builds the certificate whatever the outcome.
IdentityCertificate certify_recursion(int which, const RecursionSystem& system = RecursionSystem::standard());
/// Hand-cleared forms of the (-1,1) and (0,0) identities in A, B, q, checked
/// term by term. For (-1,1) the left side is -(Aq - A^-1 q^-1).
IdentityCertificate cleared_identity(Weight mu);

/// Same, but throws IdentityFailed when the difference is nonzero.
IdentityCertificate verify_recursion_symbolic(int which,
                                              const RecursionSystem& system = RecursionSystem::standard());

// ---------------------------------------------------------------------------
// Weyl-orbit product formula

/// The eight weights of V(w1) and V(w2) other than (0,0).
const std::vector<Weight>& extremal_weights();

struct CorollaryValue {
  RationalFunction product;
  int sign = 1;
  RationalFunction signed_value() const { return sign < 0 ? -product : product; }
};

/// prod_{alpha in Phi_varpi} [(alpha^vee, lambda+rho)]_{q^l} / [(alpha^vee, lambda+varpi+rho)]_{q^l}
/// as a symbolic bracket monomial in a, b (unsigned).
BracketMonomial corollary_bracket(Weight varpi);

/// Frozen sign table.
int corollary_sign(Weight varpi);
/// Sign found by comparing the product with the closed form at (3,3).
int derive_corollary_sign(Weight varpi);

/// Throws OutOfDomain when lambda + varpi is not dominant or a denominator
/// pairing is not positive.
CorollaryValue corollary_product(Weight lambda, Weight varpi);

/// sign * product == closed form as polynomial identity in A, B, q.
bool verify_corollary_symbolic(Weight varpi);

/// sign * product == kappa_closed at every in-domain key (lambda, varpi)
/// with 0 <= a <= a_max, 0 <= b <= b_max and varpi extremal.
VerificationReport verify_corollary_numeric(int a_max, int b_max);

}  // namespace claspkit
