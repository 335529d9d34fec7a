#pragma once

#include <map>
#include <string>
#include <vector>

#include "claspkit/laurent_poly.hpp"
#include "claspkit/rational_function.hpp"
#include "claspkit/root_data.hpp"

namespace claspkit {

/// Weights of V(w1) (index 1) or V(w2) (index 2) in the standard basis order.
const std::vector<Weight>& fund_weights(int index);

/// Which fundamental representation mu is a weight of; (0,0) belongs to 2.
/// Throws UnknownWeight otherwise.
int fund_index_of(Weight mu);

/// Object of the web category: a word in the letters 1 and 2.
class WeightWord {
 public:
  WeightWord() = default;
  explicit WeightWord(std::vector<int> letters);
  /// Parses a string such as "1212". Throws std::invalid_argument on other
  /// characters.
  static WeightWord parse(const std::string& s);

  const std::vector<int>& letters() const { return letters_; }
  Weight weight() const { return weight_; }
  size_t size() const { return letters_.size(); }
  std::string to_string() const;

 private:
  std::vector<int> letters_;
  Weight weight_{};
};

using DominantSubsequence = std::vector<Weight>;

/// S_{lambda,a}: weights mu of V(w_a) with V(lambda + mu) a summand of
/// V(lambda) (x) V(w_a), in fund_weights order.
std::vector<Weight> s_set(Weight lambda, int a);
bool in_s_set(Weight lambda, Weight mu);

/// Classical Weyl dimension (a+1)(b+1)(a+b+2)(a+2b+3)/6.
long weyl_dim(Weight lambda);

/// prod_{alpha>0} [(lambda+rho, alpha^vee)]_{q^l(alpha)} / [(rho, alpha^vee)]_{q^l(alpha)}.
LaurentPoly quantum_dim(Weight lambda);

/// Highest weights of V(lambda) (x) V(w_a), each with multiplicity one.
std::vector<Weight> tensor_expand(Weight lambda, int a);

/// Dominant weight subsequences of w with total weight lambda.
std::vector<DominantSubsequence> enumerate_E(const WeightWord& w, Weight lambda);

/// lambda -> |E(w, lambda)| over all reachable lambda.
std::map<Weight, long> weyl_multiplicities(const WeightWord& w);

/// sum_lambda |E(w, lambda)| |E(x, lambda)|.
long dim_hom(const WeightWord& w, const WeightWord& x);

/// Same count for modules given directly by their Weyl multiplicities.
long dim_hom(const std::map<Weight, long>& x, const std::map<Weight, long>& y);

}  // namespace claspkit
