#include <doctest.h>

#include <algorithm>
#include <map>

#include "claspkit/qnum.hpp"
#include "claspkit/rep_combinatorics.hpp"
#include "support.hpp"

using namespace claspkit;

namespace {

std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Independent tensor product oracle: Brauer-Klimyk with the dot action
// written directly in epsilon coordinates, where W acts by signed
// permutations and rho = (2, 1).
std::map<Weight, long> tensor_oracle(const std::map<Weight, long>& v, int index) {
  const std::vector<std::pair<int, int>> weights =
      index == 1 ? std::vector<std::pair<int, int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}
                 : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}};
  std::map<Weight, long> out;
  for (const auto& [lambda, m] : v) {
    const int x0 = lambda.a + lambda.b + 2;
    const int y0 = lambda.b + 1;
    for (const auto& [dx, dy] : weights) {
      int x = x0 + dx, y = y0 + dy;
      int sign = 1;
      if (x < 0) x = -x, sign = -sign;
      if (y < 0) y = -y, sign = -sign;
      if (x == 0 || y == 0 || x == y) continue;
      if (x < y) std::swap(x, y), sign = -sign;
      out[Weight{x - y - 1, y - 1}] += sign * m;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<Weight, long> oracle_word(const WeightWord& w) {
  std::map<Weight, long> v{{{0, 0}, 1}};
  for (int l : w.letters()) v = tensor_oracle(v, l);
  return v;
}

// Product formula over positive roots in epsilon coordinates.
Rational weyl_dim_oracle(Weight lambda) {
  const int x = lambda.a + lambda.b + 2, y = lambda.b + 1;
  Rational r = Rational(x - y, 1) * Rational(x + y, 3) * Rational(x, 2) * Rational(y, 1);
  r.canonicalize();
  return r;
}

std::vector<WeightWord> all_words(int max_len) {
  std::vector<WeightWord> out;
  for (int len = 0; len <= max_len; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::vector<int> letters;
      for (int i = 0; i < len; ++i) letters.push_back(bits >> i & 1 ? 2 : 1);
      out.emplace_back(letters);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("word parsing") {
  const WeightWord w = WeightWord::parse("1212");
  CHECK(w.letters() == std::vector<int>{1, 2, 1, 2});
  CHECK(w.weight() == Weight{2, 2});
  CHECK(w.to_string() == "1212");
  CHECK_THROWS_AS(WeightWord::parse("123"), std::invalid_argument);
  CHECK(WeightWord::parse("").size() == 0);
}

TEST_CASE("s_set examples and index checks") {
  CHECK(s_set({0, 0}, 1) == std::vector<Weight>{{1, 0}});
  CHECK(sorted(s_set({0, 1}, 2)) == sorted({{0, 1}, {2, -1}, {0, -1}}));
  // (-2,1) would leave the dominant chamber, so four of the five weights survive.
  CHECK(sorted(s_set({1, 1}, 2)) == sorted({{0, 1}, {2, -1}, {0, 0}, {0, -1}}));
  long sum = 0;
  for (Weight mu : s_set({1, 1}, 2)) sum += weyl_dim(Weight{1, 1} + mu);
  CHECK(sum == weyl_dim({1, 1}) * 5);
  CHECK(s_set({1, 1}, 1).size() == 4);
  CHECK_THROWS_AS(s_set({-1, 0}, 1), NotDominant);
  CHECK_THROWS(s_set({0, 0}, 3));
  CHECK(in_s_set({1, 0}, {0, 0}));
  CHECK_FALSE(in_s_set({0, 3}, {0, 0}));
}

TEST_CASE("weyl dimension") {
  CHECK(weyl_dim({1, 0}) == 4);
  CHECK(weyl_dim({0, 1}) == 5);
  CHECK(weyl_dim({0, 0}) == 1);
  CHECK(weyl_dim({2, 0}) == 10);
  CHECK(weyl_dim({0, 2}) == 14);
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) CHECK(Rational(weyl_dim({a, b})) == weyl_dim_oracle({a, b}));
  }
  CHECK_THROWS_AS(weyl_dim({0, -1}), NotDominant);
}

TEST_CASE("quantum dimension is a Laurent polynomial that specializes to weyl_dim") {
  CHECK(RationalFunction(quantum_dim({1, 0})) == RationalFunction(qint(6) * qint(2), qint(3)));
  CHECK(RationalFunction(quantum_dim({0, 1})) == RationalFunction(qint(6) * qint(5), qint(3) * qint(2)));
  CHECK(quantum_dim({0, 0}) == LaurentPoly(1));
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      const LaurentPoly d = quantum_dim({a, b});
      CHECK(d.coefficient_sum() == weyl_dim({a, b}));
      CHECK(d.bar() == d);
    }
  }
}

TEST_CASE("tensor_expand matches the oracle and the dimension count") {
  CHECK(sorted(tensor_expand({0, 1}, 2)) == sorted({{0, 2}, {2, 0}, {0, 0}}));
  CHECK(tensor_expand({0, 0}, 1) == std::vector<Weight>{{1, 0}});
  CHECK(sorted(tensor_expand({1, 1}, 1)) == sorted({{2, 1}, {0, 2}, {2, 0}, {0, 1}}));
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int index : {1, 2}) {
        std::map<Weight, long> got;
        long dim = 0;
        for (Weight x : tensor_expand({a, b}, index)) {
          ++got[x];
          dim += weyl_dim(x);
        }
        CHECK(got == tensor_oracle({{{a, b}, 1}}, index));
        CHECK(dim == weyl_dim({a, b}) * (index == 1 ? 4 : 5));
      }
    }
  }
}

TEST_CASE("E(w, lambda) examples") {
  CHECK(enumerate_E(WeightWord::parse("11"), {2, 0}).size() == 1);
  CHECK(enumerate_E(WeightWord::parse("1"), {0, 1}).empty());
  CHECK(enumerate_E(WeightWord::parse("22"), {0, 0}).size() == 1);
  for (const auto& seq : enumerate_E(WeightWord::parse("1212"), {1, 1})) {
    CHECK(seq.size() == 5);
    for (Weight x : seq) CHECK(x.dominant());
    CHECK(seq.back() == Weight{1, 1});
  }
}

TEST_CASE("multiplicities agree with the character oracle on all short words") {
  for (const auto& w : all_words(6)) {
    const auto m = weyl_multiplicities(w);
    CHECK(m == oracle_word(w));
    for (const auto& [lambda, k] : m) CHECK(static_cast<long>(enumerate_E(w, lambda).size()) == k);
  }
}

TEST_CASE("dimension bookkeeping over all words up to length 6") {
  int count = 0;
  for (const auto& w : all_words(6)) {
    if (w.size() == 0) continue;
    ++count;
    long total = 0;
    for (const auto& [lambda, k] : weyl_multiplicities(w)) total += k * weyl_dim(lambda);
    long expect = 1;
    for (int l : w.letters()) expect *= l == 1 ? 4 : 5;
    CHECK(total == expect);
  }
  CHECK(count == 126);
}

TEST_CASE("dim_hom") {
  CHECK(dim_hom(WeightWord::parse("1"), WeightWord::parse("1")) == 1);
  CHECK(dim_hom(WeightWord::parse("11"), WeightWord::parse("11")) == 3);
  CHECK(dim_hom(WeightWord::parse("12"), WeightWord::parse("21")) == dim_hom(WeightWord::parse("21"), WeightWord::parse("12")));
  // Hom(V(0,2), V(2,0) (x) V(w2)) vanishes.
  std::map<Weight, long> rhs;
  for (Weight x : tensor_expand({2, 0}, 2)) ++rhs[x];
  CHECK(dim_hom({{{0, 2}, 1}}, rhs) == 0);
  // End of a word equals the sum of squared multiplicities.
  const WeightWord w = WeightWord::parse("1122");
  long squares = 0;
  for (const auto& [lambda, k] : weyl_multiplicities(w)) squares += k * k;
  CHECK(dim_hom(w, w) == squares);
}
