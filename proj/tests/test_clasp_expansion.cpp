#include <doctest.h>

#include <algorithm>

#include "claspkit/clasp_expansion.hpp"
#include "claspkit/rep_combinatorics.hpp"

using namespace claspkit;

namespace {

std::vector<size_t> step_sizes(const ClaspExpansionCertificate& c) {
  std::vector<size_t> out;
  for (const auto& s : c.steps) out.push_back(s.corrections.size());
  return out;
}

}  // namespace

TEST_CASE("default path") {
  CHECK(default_clasp_path({2, 1}) == std::vector<int>{1, 1, 2});
  CHECK(default_clasp_path({0, 0}).empty());
  CHECK_THROWS_AS(default_clasp_path({-1, 2}), NotDominant);
}

TEST_CASE("trivial and small certificates") {
  const auto c10 = expansion_certificate({1, 0});
  REQUIRE(c10.steps.size() == 1);
  CHECK(c10.steps[0].corrections.empty());

  const auto c02 = expansion_certificate({0, 2});
  REQUIRE(c02.steps.size() == 2);
  CHECK(c02.steps[0].from == Weight{0, 0});
  CHECK(c02.steps[1].from == Weight{0, 1});
  const auto& corr = c02.steps[1].corrections;
  REQUIRE(corr.size() == 2);
  CHECK(corr[0].mu == Weight{2, -1});
  CHECK(corr[0].kappa == -RationalFunction(qint(4), qint(2)));
  CHECK(corr[1].mu == Weight{0, -1});
  CHECK(corr[1].kappa == RationalFunction(qint(6) * qint(5), qint(3) * qint(2)));
  CHECK(corr[1].child == Weight{0, 0});
  CHECK(corr[1].kappa * corr[1].kappa_inv == RationalFunction(1));
}

TEST_CASE("correction counts along 1,1,2 and 1,2,1") {
  CHECK(step_sizes(expansion_certificate({2, 1}, {1, 1, 2})) == std::vector<size_t>{0, 2, 2});
  CHECK(step_sizes(expansion_certificate({2, 1}, {1, 2, 1})) == std::vector<size_t>{0, 1, 3});
}

TEST_CASE("corrections are s_set minus the top weight, with closed-form kappa") {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      std::vector<int> reversed = default_clasp_path({a, b});
      std::reverse(reversed.begin(), reversed.end());
      for (const auto& path : {default_clasp_path({a, b}), reversed}) {
        const auto cert = expansion_certificate({a, b}, path);
        CHECK(cert.steps.size() == path.size());
        for (const auto& s : cert.steps) {
          const Weight top = s.letter == 1 ? kVarpi1 : kVarpi2;
          CHECK(s.to == s.from + top);
          std::vector<Weight> want;
          for (Weight mu : s_set(s.from, s.letter)) {
            if (mu != top) want.push_back(mu);
          }
          std::vector<Weight> got;
          for (const auto& c : s.corrections) {
            got.push_back(c.mu);
            CHECK(c.kappa == kappa_closed({s.from, c.mu}));
            CHECK(c.child == s.from + c.mu);
          }
          CHECK(got == want);
        }
      }
    }
  }
}

TEST_CASE("bad paths") {
  CHECK_THROWS_AS(expansion_certificate({2, 1}, {1, 2}), BadPath);
  CHECK_THROWS_AS(expansion_certificate({1, 0}, {3}), BadPath);
  CHECK_THROWS_AS(expansion_certificate({-1, 1}), NotDominant);
  CHECK_THROWS_AS(clasp_exists_at({1, 0}, 2), std::invalid_argument);
}

TEST_CASE("existence examples") {
  for (int ell = 3; ell <= 12; ++ell) CHECK(clasp_exists_at({1, 0}, ell).exists);

  const ExistenceReport r = clasp_exists_at({0, 2}, 5);
  CHECK_FALSE(r.exists);
  REQUIRE(r.failure);
  CHECK(r.failure->lambda == Weight{0, 1});
  CHECK(r.failure->mu == Weight{0, -1});
  CHECK(r.failure->numerator_vanishes);
  CHECK_FALSE(r.failure->denominator_vanishes);

  // Both paths to (1,1) only meet [5]/[2], which survives at ell = 6.
  CHECK(clasp_exists_at({1, 1}, 6).exists);
  CHECK(clasp_exists_at({1, 1}, 6, {2, 1}).exists);
}

TEST_CASE("clasps below the wall exist and the first step past it fails") {
  for (int ell : {5, 7, 9, 11}) {
    for (int a = 0; a < ell; ++a) {
      for (int b = 0; a + 2 * b + 3 <= ell - 1; ++b) {
        CHECK(clasp_exists_at({a, b}, ell).exists);
        CHECK(clasp_exists_at({a, b}, ell, [&] {
                std::vector<int> p = default_clasp_path({a, b});
                std::reverse(p.begin(), p.end());
                return p;
              }()).exists);
      }
    }
    const int m = (ell - 3) / 2;  // (0, m) is the first weight on the wall
    CHECK(clasp_exists_at({0, m}, ell).exists);
    const ExistenceReport r = clasp_exists_at({0, m + 1}, ell);
    CHECK_FALSE(r.exists);
    REQUIRE(r.failure);
    CHECK(r.failure->lambda == Weight{0, m});
    CHECK(r.failure->lambda.a + 2 * r.failure->lambda.b + 3 == ell);
    CHECK(r.failure->mu == Weight{0, -1});
    CHECK(r.failure->numerator_vanishes);
  }
}
