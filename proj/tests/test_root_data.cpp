#include <doctest.h>

#include <algorithm>
#include <set>

#include <Eigen/LU>

#include "claspkit/root_data.hpp"

using namespace claspkit;

TEST_CASE("epsilon coordinates of the fundamental weights") {
  CHECK(kVarpi1.epsilon() == Eigen::Vector2i(1, 0));
  CHECK(kVarpi2.epsilon() == Eigen::Vector2i(1, 1));
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) CHECK(Weight::from_epsilon(Weight{a, b}.epsilon()) == Weight{a, b});
  }
}

TEST_CASE("simple roots and positive roots") {
  CHECK(alpha_s().eps == Eigen::Vector2i(1, -1));
  CHECK(alpha_t().eps == Eigen::Vector2i(0, 2));
  CHECK(alpha_s().level() == 1);
  CHECK(alpha_t().level() == 2);
  const auto& pos = positive_roots();
  REQUIRE(pos.size() == 4);
  int longs = 0;
  for (const auto& r : pos) {
    CHECK(r.positive());
    longs += r.level() == 2;
  }
  CHECK(longs == 2);
}

TEST_CASE("coroot pairings with lambda + rho") {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const Weight x = Weight{a, b} + kRho;
      std::multiset<int> got;
      for (const auto& r : positive_roots()) got.insert(pairing(r, x));
      CHECK(got == std::multiset<int>{a + 1, b + 1, a + 2 * b + 3, a + b + 2});
    }
  }
  // Simple coroots pick out the Dynkin labels.
  CHECK(pairing(alpha_s(), {5, 7}) == 5);
  CHECK(pairing(alpha_t(), {5, 7}) == 7);
}

TEST_CASE("simple reflections") {
  const WeylElement s = WeylElement::s();
  const WeylElement t = WeylElement::t();
  CHECK(s.act(Weight{1, 0}) == Weight{-1, 1});
  CHECK(t.act(Weight{0, 1}) == Weight{2, -1});
  CHECK(s * s == WeylElement());
  CHECK(t * t == WeylElement());
  // (st)^4 = 1 but (st)^2 != 1.
  const WeylElement st = s * t;
  CHECK(st * st != WeylElement());
  CHECK(st * st * st * st == WeylElement());
  CHECK(s.act(alpha_s()).eps == -alpha_s().eps);
}

TEST_CASE("the Weyl group has eight elements with lengths 0..4") {
  const auto& w = weyl_group();
  REQUIRE(w.size() == 8);
  std::multiset<int> lengths;
  for (const auto& x : w) lengths.insert(x.length());
  CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3, 3, 4});
  for (const auto& x : w) {
    CHECK(std::abs(x.matrix().determinant()) == 1);
    CHECK(WeylElement::from_word(x.reduced_word()) == x);
    // Acts orthogonally in epsilon coordinates.
    const Eigen::Matrix2i e = x.epsilon_matrix();
    CHECK((e.transpose() * e) == Eigen::Matrix2i::Identity());
  }
}

TEST_CASE("orbits of the fundamental weights") {
  std::set<Weight> o1, o2;
  for (const auto& x : weyl_group()) {
    o1.insert(weyl_act(x, kVarpi1));
    o2.insert(weyl_act(x, kVarpi2));
  }
  CHECK(o1 == std::set<Weight>{{1, 0}, {-1, 1}, {1, -1}, {-1, 0}});
  CHECK(o2 == std::set<Weight>{{0, 1}, {2, -1}, {-2, 1}, {0, -1}});
}

TEST_CASE("dominance order is a partial order") {
  std::vector<Weight> ws;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) ws.push_back({a, b});
  }
  for (Weight x : ws) {
    CHECK(dominance_leq(x, x));
    for (Weight y : ws) {
      if (dominance_leq(x, y) && dominance_leq(y, x)) CHECK(x == y);
      for (Weight z : ws) {
        if (dominance_leq(x, y) && dominance_leq(y, z)) CHECK(dominance_leq(x, z));
      }
    }
  }
  CHECK(dominance_leq({0, 0}, {0, 1}));
  CHECK(dominance_leq({0, 1}, {2, 0}));
  CHECK_FALSE(dominance_leq({1, 0}, {0, 1}));
  CHECK_FALSE(dominance_leq({0, 0}, {1, 0}));
}

TEST_CASE("minimal dominating elements and inversion sets") {
  CHECK(fundamental_weights_all().size() == 9);
  for (Weight w : fundamental_weights_all()) {
    if (w == Weight{0, 0}) continue;
    const WeylElement d = d_min(w);
    const Weight dom = d.act(w);
    CHECK(dom.dominant());
    CHECK(static_cast<int>(phi_set(w).size()) == d.length());
    for (const auto& r : phi_set(w)) CHECK(r.positive());
  }
  CHECK(phi_set(kVarpi1).empty());
  CHECK(phi_set({-1, 0}).size() == 3);
  CHECK(phi_set({0, -1}).size() == 3);
}

TEST_CASE("documented examples") {
  const WeylElement w0 = WeylElement::from_word("stst");
  CHECK(w0.act(Weight{3, 2}) == Weight{-3, -2});
  CHECK(dominance_leq({0, 0}, {2, 0}));
  CHECK(d_min({-1, 0}).reduced_word() == "sts");
  CHECK(d_min({1, 0}) == WeylElement());
  CHECK(d_min({0, 0}) == WeylElement());

  const auto eps_set = [](const std::vector<Root>& rs) {
    std::set<std::pair<int, int>> out;
    for (const auto& r : rs) out.insert({r.eps(0), r.eps(1)});
    return out;
  };
  CHECK(eps_set(phi_set({-1, 1})) == eps_set({alpha_s()}));
  const WeylElement s = WeylElement::s();
  const WeylElement st = WeylElement::from_word("st");
  CHECK(eps_set(phi_set({-1, 0})) == eps_set({alpha_s(), s.act(alpha_t()), st.act(alpha_s())}));

  CHECK(pairing(alpha_s(), kRho) == 1);
  const Root two_a1_a2{Eigen::Vector2i(2, 0)};
  CHECK(pairing(two_a1_a2, kRho) == 2);
  const Root a1_a2{Eigen::Vector2i(1, 1)};
  CHECK(pairing(a1_a2, Weight{4, 5} + kRho) == 4 + 10 + 3);
}
