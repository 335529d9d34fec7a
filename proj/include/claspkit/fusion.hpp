#pragma once

#include <stdexcept>
#include <vector>

#include "claspkit/cyclotomic.hpp"
#include "claspkit/root_data.hpp"

namespace claspkit {

struct EllTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Specialization q = zeta, zeta a primitive 2*ell-th root of unity.
class FusionContext {
 public:
  explicit FusionContext(int ell);

  int ell() const { return ell_; }
  int order() const { return 2 * ell_; }
  bool odd() const { return ell_ % 2 != 0; }

 private:
  int ell_;
};

/// Quantum dimension of V(lambda) at zeta.
CyclotomicNumber quantum_dim_at(Weight lambda, const FusionContext& ctx);

/// True iff the quantum dimension vanishes at zeta.
bool is_negligible(Weight lambda, const FusionContext& ctx);

/// Highest weights on the upper closure of the lowest alcove: a + 2b = ell - 3
/// (odd ell, a even) or a + b = (ell - 4)/2 (even ell). Needs ell > 4.
std::vector<Weight> upper_closure_weights(const FusionContext& ctx);

/// Dominant weights strictly inside the lowest alcove: a + 2b + 3 < ell (odd
/// ell) or a + b + 2 < ell/2 (even ell). Needs ell > 4.
std::vector<Weight> lowest_alcove_interior(const FusionContext& ctx);

/// -[6][2]/[3] == -[2]_{q^2} at a primitive 2*ell-th root of unity; holds for
/// ell = 8.
bool check_ell8_identity(int ell = 8);

}  // namespace claspkit
