#include <gtest/gtest.h>

#include "hadamard/bounds.hpp"
#include "hadamard/core.hpp"
#include "hadamard/fixtures.hpp"
#include "oracles.hpp"

using namespace hadamard;

TEST(Krawtchouk, SmallValues) {
  for (int z = 0; z <= 8; ++z) EXPECT_EQ(krawtchouk(8, 0, z), 1);
  EXPECT_EQ(krawtchouk(8, 1, 3), 2);
  EXPECT_EQ(krawtchouk(8, 2, 4), -4);
  EXPECT_EQ(krawtchouk_direct(8, 2, 4), -4);
}

TEST(Krawtchouk, MatchesDefiningSum) {
  for (int n = 1; n <= 40; ++n)
    for (int i = 0; i <= n; ++i)
      for (int z = 0; z <= n; ++z)
        ASSERT_EQ(krawtchouk(n, i, z), BigInt(static_cast<long long>(oracle::krawtchouk(n, i, z)))) << n << " " << i << " " << z;
}

TEST(Annihilator, FourDistanceCoefficients) {
  for (auto [n, alpha] : std::vector<std::pair<int, int>>{{12, 2}, {16, 2}, {24, 4}, {32, 4}, {48, 3}}) {
    auto e = annihilator_expansion(n, {n / 2 - alpha, n / 2, n / 2 + alpha, n});
    Rational den = Rational(n) * (n * n - 4 * alpha * alpha);
    EXPECT_EQ(e.coeff(1), Rational(3 * n - 4 * alpha * alpha - 2) / den);
    EXPECT_EQ(e.coeff(3), Rational(6) / den);
    EXPECT_EQ(e.coeff(0), 0);
    EXPECT_EQ(e.coeff(2), 0);
  }
}

TEST(Annihilator, SixDistanceCoefficients) {
  int n = 24, a = 2, b = 4;
  auto e = annihilator_expansion(n, {n / 2 - b, n / 2 - a, n / 2, n / 2 + a, n / 2 + b, n});
  Rational den = Rational(n) * (n * n - 4 * a * a) * (n * n - 4 * b * b);
  EXPECT_EQ(e.coeff(1), Rational(15 * n * n - 30 * n + 16 - 4 * (3 * n - 2) * (a * a + b * b) + 16 * a * a * b * b) / den);
  for (int i : {0, 2, 4}) EXPECT_EQ(e.coeff(i), 0);
  EXPECT_NE(e.coeff(3), 0);
  EXPECT_NE(e.coeff(5), 0);
}

TEST(Annihilator, RootsAndNormalization) {
  for (int n : {8, 12, 16, 20}) {
    std::vector<int> s{n / 2 - 1, n / 2, n / 2 + 1, n};
    auto e = annihilator_expansion(n, s);
    EXPECT_EQ(e.evaluate(0), 1);
    for (int z : s)
      if (z != n) EXPECT_EQ(e.evaluate(z), 0) << n << " " << z;
  }
  auto trivial = annihilator_expansion(10, {10});
  EXPECT_EQ(trivial.coeff(0), 1);
  EXPECT_EQ(trivial.coeffs.size(), 1u);
  EXPECT_THROW(annihilator_expansion(10, {3, 10}), std::invalid_argument);
  EXPECT_THROW(annihilator_expansion(10, {3, 7}), std::invalid_argument);
}

TEST(AbsoluteBound, Examples) {
  EXPECT_EQ(absolute_bound(12, 4), 464);
  EXPECT_EQ(matrix_bound_from_code_bound(absolute_bound(12, 4), 12), 19);
  EXPECT_EQ(matrix_bound_from_code_bound(absolute_bound(24, 6), 24), 1856);
  EXPECT_EQ(absolute_bound(9, 1), 2);
}

TEST(LpBound, Examples) {
  auto b12 = lp_bound(12, {4, 6, 8, 12});
  ASSERT_TRUE(b12);
  EXPECT_EQ(matrix_bound_from_code_bound(*b12, 12), 7);
  EXPECT_EQ(lp_bound(16, {4, 8, 12, 16}), std::nullopt);
  auto b48 = lp_bound(48, {20, 24, 28, 48});
  ASSERT_TRUE(b48);
  EXPECT_EQ(matrix_bound_from_code_bound(*b48, 48), 28);
}

TEST(QubBounds, Examples) {
  auto b16 = qub_bounds(16, 2);
  EXPECT_EQ(b16.absolute, 36);
  EXPECT_EQ(b16.absolute_refined, 35);
  EXPECT_EQ(b16.lp, 8);
  auto b16a = qub_bounds(16, 4);
  EXPECT_EQ(b16a.table_absolute(), 35);
  EXPECT_EQ(b16a.lp, std::nullopt);
  EXPECT_EQ(qub_bounds(40, 4).lp, 28);
  auto b24 = qub_bounds(24, 4);
  EXPECT_EQ(b24.table_absolute(), 85);
  EXPECT_EQ(b24.lp, 85);
  auto b32 = qub_bounds(32, 4);
  EXPECT_EQ(b32.table_absolute(), 156);
  EXPECT_EQ(b32.lp, 32);
  EXPECT_THROW(qub_bounds(16, 8), std::invalid_argument);
}

TEST(QubBounds, ClosedFormsAgreeWithExpansion) {
  for (int n = 8; n <= 48; n += 4)
    for (const auto& p : feasible_qub_params(n)) {
      if (2 * p.alpha >= n) continue;
      int alpha = static_cast<int>(p.alpha);
      auto b = qub_bounds(n, alpha);
      std::vector<int> s{n / 2 - alpha, n / 2, n / 2 + alpha, n};
      EXPECT_EQ(matrix_bound_from_code_bound(absolute_bound(n, 4), n), b.absolute) << n;
      auto lp = lp_bound(n, s);
      EXPECT_EQ(lp.has_value(), b.lp.has_value()) << n << " " << alpha;
      if (lp && b.lp) EXPECT_EQ(matrix_bound_from_code_bound(*lp, n), *b.lp) << n << " " << alpha;
    }
}

TEST(WeakIIBounds, Examples) {
  EXPECT_EQ(weakII_bounds(24, 2, 4).absolute, 1856);
  EXPECT_EQ(weakII_bounds(24, 2, 4).lp, 85);
  EXPECT_EQ(weakII_bounds(48, 2, 6).lp, 388);
  EXPECT_EQ(weakII_bounds(36, 2, 8).lp, std::nullopt);
}

TEST(WeakIIBounds, ClosedFormsAgreeWithExpansion) {
  for (int n = 24; n <= 48; n += 4)
    for (const auto& w : feasible_weak_params(n, 0)) {
      int a = static_cast<int>(w.a / 2), b = static_cast<int>(w.b / 2);
      auto r = weakII_bounds(n, a, b);
      std::vector<int> s{n / 2 - b, n / 2 - a, n / 2, n / 2 + a, n / 2 + b, n};
      EXPECT_EQ(matrix_bound_from_code_bound(absolute_bound(n, 6), n), r.absolute);
      auto lp = lp_bound(n, s);
      EXPECT_EQ(lp.has_value(), r.lp.has_value()) << n << " " << a << " " << b;
      if (lp && r.lp) EXPECT_EQ(matrix_bound_from_code_bound(*lp, n), *r.lp);
    }
}

TEST(Scheme, HadamardCodeAndPerturbation) {
  BinaryCode c = code_of_hadamard(sylvester(8));
  auto ok = verify_association_scheme(c);
  EXPECT_TRUE(ok.ok) << ok.failure;
  EXPECT_EQ(ok.distances, (std::vector<int>{0, 4, 8}));

  // move one antipodal pair: still self-complementary, distances stay few, axioms break
  std::vector<Word> w(c.words());
  Word all = low_mask(8);
  auto it = std::find(w.begin(), w.end(), Word{0b00001111});
  ASSERT_NE(it, w.end());
  *it ^= 0b00010001;
  auto jt = std::find(w.begin(), w.end(), Word{0b00001111} ^ all);
  ASSERT_NE(jt, w.end());
  *jt ^= 0b00010001;
  auto bad = verify_association_scheme(BinaryCode(8, w));
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.failure.empty());
}

TEST(Scheme, CodesMeetingTheLpBound) {
  // f = 8 meets the LP bound 8 for both (8,(4,16)) and (16,(16,16))
  for (const char* name : {"B8,7,1", "B16,7,3"}) {
    auto r = verify_association_scheme(fixture_binary_code(name));
    EXPECT_TRUE(r.ok) << name << ": " << r.failure;
    EXPECT_EQ(r.distances.size(), 5u);
  }
  EXPECT_THROW(verify_association_scheme(fixture_binary_code("D12,2")), std::invalid_argument);
}
