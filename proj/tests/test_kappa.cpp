#include <doctest.h>

#include <functional>
#include <map>
#include <thread>
#include <tuple>

#include "claspkit/kappa.hpp"
#include "claspkit/rep_combinatorics.hpp"
#include "support.hpp"

using namespace claspkit;
using claspkit::testing::close;
using claspkit::testing::eval_at;

namespace {

// Straight transcription of the seven recursions at a real q, with
// kappa^{-1} = 0 outside the domain. Shares no code with the library.
class RecursionOracle {
 public:
  explicit RecursionOracle(double q) : q_(q) {}

  static bool in_domain(int a, int b, int x, int y) {
    if (a < 0 || b < 0) return false;
    if (x == 0 && y == 0) return a >= 1;
    return a + x >= 0 && b + y >= 0;
  }

  double k(int a, int b, int x, int y) {
    REQUIRE(in_domain(a, b, x, y));
    if (x >= 0 && y >= 0 && x + y == 1) return 1;
    const auto key = std::make_tuple(a, b, x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const double v = compute(a, b, x, y);
    memo_[key] = v;
    return v;
  }

 private:
  double n(int m) const { return claspkit::testing::qn(m, q_); }
  double inv(int a, int b, int x, int y) { return in_domain(a, b, x, y) ? 1 / k(a, b, x, y) : 0.0; }
  // kappa^{-1} factor times a kappa factor; the kappa is only looked at when
  // the inverse is nonzero.
  double inv_times(int a, int b, int x, int y, int c, int d, int u, int v) {
    const double i = inv(a, b, x, y);
    return i == 0 ? 0 : i * k(c, d, u, v);
  }

  double compute(int a, int b, int x, int y) {
    const double c5 = n(5) / n(2);
    if (x == -1 && y == 1) return -n(2) - inv(a - 1, b, -1, 1);
    if (x == 2 && y == -1) return -n(4) / n(2) - inv(a, b - 1, 2, -1);
    if (x == 0 && y == 0) {
      return c5 - inv_times(a - 1, b, -1, 1, a - 2, b + 1, 2, -1) - inv(a - 1, b, 1, -1);
    }
    if (x == 1 && y == -1) {
      return c5 - inv_times(a, b - 1, 2, -1, a + 2, b - 2, -1, 1) - inv(a, b - 1, 0, 0) / (n(2) * n(2));
    }
    if (x == -1 && y == 0) {
      return -n(6) * n(2) / n(3) - inv(a - 1, b, -1, 0) - inv_times(a - 1, b, -1, 1, a - 2, b + 1, 1, -1) -
             inv_times(a - 1, b, 1, -1, a, b - 1, -1, 1);
    }
    if (x == -2 && y == 1) {
      const double i2 = inv(a - 2, b, -1, 1);
      double third = 0;
      if (i2 != 0) third = k(a - 2, b + 1, 0, 0) * i2 * i2 * inv(a - 1, b, -1, 1);
      return c5 * k(a - 1, b, -1, 1) - (-n(2) - i2) * inv_times(a - 1, b, -1, 0, a - 1, b, -1, 1) - third;
    }
    if (x == 0 && y == -1) {
      return n(6) * n(5) / (n(3) * n(2)) - inv(a, b - 1, 0, -1) - inv_times(a, b - 1, 2, -1, a + 2, b - 2, -2, 1) -
             (in_domain(a, b - 1, 0, 0) ? 1.0 : 0.0) - inv_times(a, b - 1, -2, 1, a - 2, b, 2, -1);
    }
    FAIL("unexpected weight");
    return 0;
  }

  double q_;
  std::map<std::tuple<int, int, int, int>, double> memo_;
};

// The closed forms, written out again at a real q.
double closed_oracle(int a, int b, Weight mu, double q) {
  const auto n = [q](int m) { return claspkit::testing::qn(m, q); };
  if (mu == Weight{-1, 1}) return -n(a + 1) / n(a);
  if (mu == Weight{2, -1}) return -n(2 * b + 2) / n(2 * b);
  if (mu == Weight{0, 0}) return n(a + 2) * n(a + 2 * b + 4) / (n(2) * n(a) * n(a + 2 * b + 2));
  if (mu == Weight{1, -1}) return n(a + 2 * b + 3) * n(2 * b + 2) / (n(a + 2 * b + 2) * n(2 * b));
  if (mu == Weight{-2, 1}) return -n(a + 1) * n(2 * a + 2 * b + 4) / (n(a - 1) * n(2 * a + 2 * b + 2));
  if (mu == Weight{-1, 0}) {
    return -n(2 * a + 2 * b + 4) * n(a + 2 * b + 3) * n(a + 1) / (n(2 * a + 2 * b + 2) * n(a + 2 * b + 2) * n(a));
  }
  if (mu == Weight{0, -1}) {
    return n(2 * a + 2 * b + 4) * n(a + 2 * b + 3) * n(2 * b + 2) /
           (n(2 * a + 2 * b + 2) * n(a + 2 * b + 1) * n(2 * b));
  }
  return 1;
}

RationalFunction frac(const LaurentPoly& n, const LaurentPoly& d) { return RationalFunction(n, d); }

}  // namespace

TEST_CASE("closed form examples") {
  CHECK(kappa_closed({{1, 0}, {-1, 1}}) == -RationalFunction(qint(2)));
  CHECK(kappa_closed({{4, 3}, {1, 0}}) == RationalFunction(1));
  CHECK(kappa_closed({{4, 3}, {0, 1}}) == RationalFunction(1));
  CHECK(kappa_closed({{0, 1}, {2, -1}}) == -frac(qint(4), qint(2)));
  CHECK(kappa_closed({{0, 1}, {2, -1}}) == -RationalFunction(qint(2, 2)));
  CHECK(kappa_closed({{1, 1}, {0, 0}}) == frac(qint(3) * qint(7), qint(2) * qint(1) * qint(5)));
  CHECK(kappa_closed({{0, 1}, {0, -1}}) == frac(qint(6) * qint(5), qint(3) * qint(2)));
}

TEST_CASE("closed forms reject keys outside the domain") {
  CHECK_THROWS_AS(kappa_closed({{0, 0}, {-1, 1}}), OutOfDomain);
  CHECK_THROWS_AS(kappa_closed({{3, 0}, {1, -1}}), OutOfDomain);
  CHECK_THROWS_AS(kappa_closed({{1, 4}, {-2, 1}}), OutOfDomain);
  CHECK_THROWS_AS(kappa_closed({{0, 2}, {0, 0}}), OutOfDomain);
  CHECK_THROWS_AS(kappa_closed_form({3, 3}), UnknownWeight);
}

TEST_CASE("kappa_inv is total") {
  for (int a = 0; a <= 4; ++a) CHECK(kappa_inv({{a, 0}, {1, -1}}).is_zero());
  for (int b = 0; b <= 4; ++b) CHECK(kappa_inv({{1, b}, {-2, 1}}).is_zero());
  CHECK(kappa_inv({{1, 0}, {-1, 1}}) == -RationalFunction(1) / RationalFunction(qint(2)));
}

TEST_CASE("recursive examples") {
  KappaTable t;
  CHECK(kappa_recursive({{1, 0}, {-1, 1}}, t) == -RationalFunction(qint(2)));
  CHECK(kappa_recursive({{0, 1}, {2, -1}}, t) == -frac(qint(4), qint(2)));
  CHECK(kappa_recursive({{1, 1}, {0, 0}}, t) == frac(qint(3) * qint(7), qint(2) * qint(5)));
  CHECK_THROWS_AS(kappa_recursive({{0, 0}, {0, 0}}, t), OutOfDomain);
  CHECK_THROWS_AS(t.store({{0, 0}, {0, 0}}, 1), OutOfDomain);
}

TEST_CASE("domain agrees with s_set") {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      for (Weight mu : fundamental_weights_all()) {
        CHECK(KappaKey{{a, b}, mu}.in_domain() == RecursionOracle::in_domain(a, b, mu.a, mu.b));
        CHECK(KappaKey{{a, b}, mu}.in_domain() == in_s_set({a, b}, mu));
      }
    }
  }
}

TEST_CASE("closed forms agree with the written-out formulas") {
  for (double q : {1.1, 1.37}) {
    for (int a = 0; a <= 8; ++a) {
      for (int b = 0; b <= 8; ++b) {
        for (Weight mu : fundamental_weights_all()) {
          const KappaKey key{{a, b}, mu};
          if (!key.in_domain()) continue;
          CHECK(close(eval_at(kappa_closed(key), q), closed_oracle(a, b, mu, q)));
        }
      }
    }
  }
}

TEST_CASE("the recursion oracle reproduces the closed forms") {
  RecursionOracle oracle(1.23);
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      for (Weight mu : recursion_weights()) {
        if (!RecursionOracle::in_domain(a, b, mu.a, mu.b)) continue;
        CHECK(close(oracle.k(a, b, mu.a, mu.b), closed_oracle(a, b, mu, 1.23), 1e-8));
      }
    }
  }
}

TEST_CASE("recursive and closed values agree on the 10 x 10 grid with no cycles") {
  const VerificationReport r = verify_recursion_numeric(9, 9);
  CHECK(r.ok());
  CHECK(r.comparisons > 400);
  CHECK(r.skipped > 0);
}

TEST_CASE("grid that includes b = 0 skips keys removed by the initial conditions") {
  const VerificationReport r = verify_recursion_numeric(2, 0);
  // At b = 0: (2,-1), (1,-1), (0,-1) never apply; (-1,1), (0,0), (-1,0)
  // need a >= 1 and (-2,1) needs a >= 2.
  CHECK(r.comparisons == 7);
  CHECK(r.skipped == 14);
  CHECK(r.ok());
}

TEST_CASE("values are bar invariant and nonzero") {
  KappaTable t(KappaMode::kClosed);
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      for (Weight mu : fundamental_weights_all()) {
        const KappaKey key{{a, b}, mu};
        if (!key.in_domain()) continue;
        const RationalFunction v = kappa_value(key, t);
        CHECK(v.bar() == v);
        CHECK_FALSE(v.is_zero());
      }
    }
  }
}

TEST_CASE("a shared table gives the same values from several threads") {
  KappaTable shared;
  std::vector<std::thread> pool;
  for (int i = 0; i < 4; ++i) {
    pool.emplace_back([&shared, i] {
      for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
          const KappaKey key{{(a + i) % 7, b}, recursion_weights()[static_cast<size_t>(i)]};
          if (key.in_domain()) kappa_recursive(key, shared);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& [key, value] : shared.snapshot()) CHECK(value == kappa_closed(key));
}

TEST_CASE("symbolic certificates for all seven recursions") {
  for (int id = 1; id <= 7; ++id) {
    const IdentityCertificate c = verify_recursion_symbolic(id);
    CHECK(c.ok());
    CHECK(c.stratum == "generic");
    CHECK(c.mu == recursion_weights()[static_cast<size_t>(id - 1)]);
    CHECK_FALSE(c.lhs.is_zero());
  }
  const IdentityCertificate c1 = certify_recursion(1);
  const LaurentPoly q = LaurentPoly::q(), qi = LaurentPoly::q(-1);
  const LaurentPoly A = LaurentPoly::A(), Ai = LaurentPoly::A(-1);
  CHECK(c1.lhs == -(A * q - Ai * qi));
  CHECK(c1.rhs == -((q + qi) * (A - Ai)) + (A * qi - Ai * q));
}

TEST_CASE("hand-cleared identities") {
  const IdentityCertificate x = cleared_identity({-1, 1});
  const IdentityCertificate y = cleared_identity({0, 0});
  CHECK(x.ok());
  CHECK(y.ok());
  // As printed, with a plus sign on the left, the first one is false.
  CHECK_FALSE((-x.lhs - x.rhs).is_zero());
  // The (-1,1) certificate is exactly the hand-cleared identity.
  CHECK(certify_recursion(1).lhs == x.lhs);
  CHECK_THROWS_AS(cleared_identity({1, 0}), UnknownWeight);
}

TEST_CASE("the (0,0) recursion reduces to a four-term bracket identity") {
  const auto br = [](int ca, int cb, int c0) { return BracketMonomial::bracket(SymExponent{ca, cb, c0}); };
  const BracketMonomial lhs = br(1, 0, 2) * br(0, 2, 2) * br(1, 2, 4);
  const SymFraction rhs = (BracketMonomial::bracket(5) * br(1, 0, 0) * br(0, 2, 2) * br(1, 2, 2)).realize() -
                          (BracketMonomial::bracket(2) * br(1, 0, -1) * br(0, 2, 4) * br(1, 2, 2)).realize() -
                          (BracketMonomial::bracket(2) * br(1, 0, 0) * br(0, 2, 0) * br(1, 2, 1)).realize();
  CHECK(equivalent(lhs.realize(), rhs));
}

TEST_CASE("negative control: a perturbed constant is caught") {
  const RecursionSystem bad = RecursionSystem::standard().perturbed(3, Rational(2));
  const IdentityCertificate c = certify_recursion(3, bad);
  CHECK_FALSE(c.ok());
  CHECK_FALSE(c.difference.is_zero());
  CHECK_THROWS_AS(verify_recursion_symbolic(3, bad), IdentityFailed);
  CHECK_FALSE(verify_recursion_numeric(3, 3, bad).ok());
  const VerificationReport capped = verify_recursion_numeric(12, 12, bad, 2);
  CHECK(capped.mismatches.size() == 2);
  CHECK(capped.truncated);
  // Other recursions are untouched by the perturbation symbolically.
  CHECK(certify_recursion(1, bad).ok());
}

TEST_CASE("corollary product examples and sign table") {
  const CorollaryValue v = corollary_product({3, 2}, {-1, 1});
  CHECK(v.sign == -1);
  CHECK(v.product == frac(qint(4), qint(3)));
  const CorollaryValue w = corollary_product({3, 2}, {-2, 1});
  CHECK(w.sign == -1);
  CHECK(w.product == frac(qint(4) * qint(14), qint(2) * qint(12)));
  CHECK(corollary_product({3, 2}, {1, 0}).product == RationalFunction(1));
  CHECK(corollary_product({3, 2}, {1, 0}).sign == 1);

  const std::map<Weight, int> signs{{{-1, 1}, -1}, {{2, -1}, -1}, {{-2, 1}, -1}, {{-1, 0}, -1},
                                    {{1, -1}, 1},  {{0, -1}, 1},  {{1, 0}, 1},   {{0, 1}, 1}};
  REQUIRE(extremal_weights().size() == 8);
  for (Weight w8 : extremal_weights()) {
    CHECK(corollary_sign(w8) == signs.at(w8));
    CHECK(derive_corollary_sign(w8) == corollary_sign(w8));
    CHECK(verify_corollary_symbolic(w8));
  }
  CHECK_THROWS_AS(corollary_product({0, 3}, {-1, 1}), OutOfDomain);
}

TEST_CASE("corollary agrees with the closed forms on the 11 x 11 grid") {
  const VerificationReport r = verify_corollary_numeric(10, 10);
  CHECK(r.ok());
  CHECK(r.comparisons > 600);
}
