#include "claspkit/rep_combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "claspkit/qnum.hpp"

namespace claspkit {

namespace {

void require_dominant(Weight lambda) {
  if (!lambda.dominant()) throw NotDominant("weight is not dominant: " + lambda.to_string());
}

void require_index(int a) {
  if (a != 1 && a != 2) throw std::invalid_argument("fundamental index must be 1 or 2");
}

void extend(const std::vector<int>& letters, size_t pos, Weight partial, Weight target,
            DominantSubsequence& prefix, std::vector<DominantSubsequence>& out) {
  if (pos == letters.size()) {
    if (partial == target) out.push_back(prefix);
    return;
  }
  for (Weight mu : s_set(partial, letters[pos])) {
    prefix.push_back(mu);
    extend(letters, pos + 1, partial + mu, target, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Weight>& fund_weights(int index) {
  static const std::vector<Weight> one{{1, 0}, {-1, 1}, {1, -1}, {-1, 0}};
  static const std::vector<Weight> two{{0, 1}, {2, -1}, {0, 0}, {-2, 1}, {0, -1}};
  require_index(index);
  return index == 1 ? one : two;
}

int fund_index_of(Weight mu) {
  for (int index : {1, 2}) {
    const auto& ws = fund_weights(index);
    if (std::find(ws.begin(), ws.end(), mu) != ws.end()) return index;
  }
  throw UnknownWeight("not a weight of V(w1) or V(w2): " + mu.to_string());
}

WeightWord::WeightWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) {
    require_index(l);
    weight_ = weight_ + (l == 1 ? kVarpi1 : kVarpi2);
  }
}

WeightWord WeightWord::parse(const std::string& s) {
  std::vector<int> letters;
  for (char c : s) {
    if (c != '1' && c != '2') throw std::invalid_argument("word letters must be 1 or 2, got '" + s + "'");
    letters.push_back(c - '0');
  }
  return WeightWord(std::move(letters));
}

std::string WeightWord::to_string() const {
  std::string s;
  for (int l : letters_) s += static_cast<char>('0' + l);
  return s;
}

std::vector<Weight> s_set(Weight lambda, int a) {
  require_dominant(lambda);
  std::vector<Weight> out;
  for (Weight mu : fund_weights(a)) {
    if (!(lambda + mu).dominant()) continue;
    // V(lambda) is a summand of V(lambda) (x) V(w2) exactly when a >= 1.
    if (mu == Weight{0, 0} && lambda.a < 1) continue;
    out.push_back(mu);
  }
  return out;
}

bool in_s_set(Weight lambda, Weight mu) {
  if (!lambda.dominant()) return false;
  const auto s = s_set(lambda, fund_index_of(mu));
  return std::find(s.begin(), s.end(), mu) != s.end();
}

long weyl_dim(Weight lambda) {
  require_dominant(lambda);
  const long a = lambda.a, b = lambda.b;
  return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6;
}

LaurentPoly quantum_dim(Weight lambda) {
  require_dominant(lambda);
  LaurentPoly num(1L), den(1L);
  for (const auto& alpha : positive_roots()) {
    num *= qint(pairing(alpha, lambda + kRho), alpha.level());
    den *= qint(pairing(alpha, kRho), alpha.level());
  }
  const RationalFunction f(num, den);
  if (!f.is_laurent_poly()) throw std::logic_error("quantum dimension is not a Laurent polynomial");
  return f.num();
}

std::vector<Weight> tensor_expand(Weight lambda, int a) {
  std::vector<Weight> out;
  for (Weight mu : s_set(lambda, a)) out.push_back(lambda + mu);
  return out;
}

std::vector<DominantSubsequence> enumerate_E(const WeightWord& w, Weight lambda) {
  std::vector<DominantSubsequence> out;
  if (!lambda.dominant()) return out;
  DominantSubsequence prefix;
  extend(w.letters(), 0, Weight{0, 0}, lambda, prefix, out);
  return out;
}

std::map<Weight, long> weyl_multiplicities(const WeightWord& w) {
  // Path counting layer by layer; equivalent to summing |E(w, lambda)|.
  std::map<Weight, long> layer{{Weight{0, 0}, 1}};
  for (int letter : w.letters()) {
    std::map<Weight, long> next;
    for (const auto& [lambda, count] : layer) {
      for (Weight mu : s_set(lambda, letter)) next[lambda + mu] += count;
    }
    layer = std::move(next);
  }
  return layer;
}

long dim_hom(const std::map<Weight, long>& x, const std::map<Weight, long>& y) {
  long total = 0;
  for (const auto& [lambda, m] : x) {
    if (auto it = y.find(lambda); it != y.end()) total += m * it->second;
  }
  return total;
}

long dim_hom(const WeightWord& w, const WeightWord& x) {
  return dim_hom(weyl_multiplicities(w), weyl_multiplicities(x));
}

}  // namespace claspkit
