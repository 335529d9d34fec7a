#include "claspkit/fusion.hpp"

#include <string>

#include "claspkit/qnum.hpp"
#include "claspkit/rational_function.hpp"
#include "claspkit/rep_combinatorics.hpp"

namespace claspkit {

namespace {

void require_ell_above_4(const FusionContext& ctx) {
  if (ctx.ell() <= 4) throw EllTooSmall("alcove geometry needs ell > 4, got " + std::to_string(ctx.ell()));
}

}  // namespace

FusionContext::FusionContext(int ell) : ell_(ell) {
  if (ell < 3) throw EllTooSmall("ell must be at least 3, got " + std::to_string(ell));
}

CyclotomicNumber quantum_dim_at(Weight lambda, const FusionContext& ctx) {
  return cyc_eval(quantum_dim(lambda), ctx.ell());
}

bool is_negligible(Weight lambda, const FusionContext& ctx) { return quantum_dim_at(lambda, ctx).is_zero(); }

std::vector<Weight> upper_closure_weights(const FusionContext& ctx) {
  require_ell_above_4(ctx);
  const int ell = ctx.ell();
  std::vector<Weight> out;
  if (ctx.odd()) {
    // (2k, (ell-3)/2 - k), clamped to dominant weights.
    for (int k = 0; (ell - 3) / 2 - k >= 0; ++k) out.push_back({2 * k, (ell - 3) / 2 - k});
  } else {
    for (int k = 0; k <= (ell - 4) / 2; ++k) out.push_back({k, (ell - 4) / 2 - k});
  }
  return out;
}

std::vector<Weight> lowest_alcove_interior(const FusionContext& ctx) {
  require_ell_above_4(ctx);
  const int ell = ctx.ell();
  std::vector<Weight> out;
  for (int b = 0; b <= ell; ++b) {
    for (int a = 0; a <= ell; ++a) {
      const bool inside = ctx.odd() ? a + 2 * b + 3 < ell : 2 * (a + b + 2) < ell;
      if (inside) out.push_back({a, b});
    }
  }
  return out;
}

bool check_ell8_identity(int ell) {
  const RationalFunction lhs = -RationalFunction(qint(6) * qint(2), qint(3));
  if (!lhs.is_laurent_poly()) return false;
  return cyc_eval(lhs.num(), ell) == cyc_eval(-qint(2, 2), ell);
}

}  // namespace claspkit
