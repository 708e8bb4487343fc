#include <gtest/gtest.h>

#include "hadamard/clique.hpp"
#include "hadamard/core.hpp"
#include "hadamard/fixtures.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {

SignMatrix h12() { return fixture_matrix("H12"); }
SignMatrix k12() { return fixture_matrix("K12"); }

}  // namespace

TEST(IsHadamard, SmallCases) {
  EXPECT_TRUE(is_hadamard(SignMatrix::from_rows({{1, 1}, {1, -1}})));
  EXPECT_FALSE(is_hadamard(SignMatrix::generate(4, [](int, int) { return 1; })));
  EXPECT_FALSE(is_hadamard(SignMatrix::identity(4)));
}

TEST(IsHadamard, BorderedCirculants) {
  EXPECT_TRUE(is_hadamard(circulant_bordered("-+-+++---+-")));
  EXPECT_TRUE(is_hadamard(circulant_bordered("-+--++++-+-+----++-")));
  EXPECT_TRUE(is_hadamard(circulant_bordered("-----+-+--++--++-+-++++")));
  for (const char* name : {"H12", "H20_1", "H24_2"}) EXPECT_TRUE(oracle::hadamard(fixture_matrix(name))) << name;
}

TEST(IsWeighing, Examples) {
  EXPECT_TRUE(is_weighing(SignMatrix::identity(5), 1));
  EXPECT_TRUE(is_weighing(sylvester(16), 16));
  EXPECT_FALSE(is_weighing(sylvester(16), 15));
  // (1/4) H12 K12^T has entries 0, +-1 and weight 9
  auto p = oracle::product(h12(), k12());
  SignMatrix w = SignMatrix::generate(12, [&](int i, int j) { return static_cast<int>(p[i][j] / 4); });
  EXPECT_TRUE(is_weighing(w, 9));
}

TEST(ClassifyPair, SelfPairIsTrivial) {
  for (SignMatrix h : {sylvester(8), h12(), fixture_matrix("H20_1")}) {
    auto c = classify_pair(h, h);
    EXPECT_EQ(c.kind, PairKind::QuasiUnbiased);
    EXPECT_EQ(c.l, 1);
    EXPECT_EQ(c.a, static_cast<std::int64_t>(h.order()) * h.order());
  }
}

TEST(ClassifyPair, FigureOnePair) {
  auto c = classify_pair(h12(), k12());
  EXPECT_TRUE(c.matches(PairClassification::quasi_unbiased(9, 16)));
  EXPECT_EQ(oracle::abs_entries(h12(), k12()), (std::set<long>{0, 4}));
}

TEST(ClassifyPair, UnbiasedReportsAsQuasiUnbiased) {
  SignMatrix h = sylvester(4);
  SignMatrix k = SignMatrix::from_rows({{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}});
  ASSERT_TRUE(is_hadamard(k));
  auto c = classify_pair(h, k);
  EXPECT_EQ(c.kind, PairKind::QuasiUnbiased);
  EXPECT_EQ(c.l, 4);
  EXPECT_EQ(c.a, 4);
}

TEST(ClassifyPair, OrderMismatchAndNonHadamard) {
  EXPECT_EQ(classify_pair(sylvester(8), sylvester(4)).kind, PairKind::NotHadamardPair);
  EXPECT_EQ(classify_pair(sylvester(4), SignMatrix::identity(4)).kind, PairKind::NotHadamardPair);
}

TEST(ClassifyPair, SymmetricInArguments) {
  SignMatrix h = fixture_matrix("H24_2");
  SignMatrix k = negate_first_column(h);
  auto a = classify_pair(h, k), b = classify_pair(k, h);
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.sigma, b.sigma);
  EXPECT_EQ(a.n_a, b.n_a);
}

TEST(CheckMutual, Examples) {
  EXPECT_TRUE(check_mutual({h12()}, PairClassification::quasi_unbiased(9, 16)));
  EXPECT_TRUE(check_mutual({h12(), k12()}, PairClassification::quasi_unbiased(9, 16)));
  EXPECT_FALSE(check_mutual({h12(), k12()}, PairClassification::quasi_unbiased(4, 36)));
  EXPECT_FALSE(check_mutual({h12(), k12(), h12()}, PairClassification::quasi_unbiased(9, 16)));
}

TEST(Normalize, Postconditions) {
  std::mt19937_64 rng(7);
  for (SignMatrix h : {sylvester(8), h12(), k12(), fixture_matrix("H24_2")}) {
    SignMatrix m = normalize(h);
    for (int j = 0; j < m.order(); ++j) EXPECT_EQ(m.at(0, j), 1);
    for (int i = 0; i < m.order(); ++i) EXPECT_EQ(m.at(i, 0), 1);
    EXPECT_EQ(normalize(m), m);
    EXPECT_EQ(normalize(m.negate_row(0)), m);
    EXPECT_TRUE(oracle::hadamard(m));
  }
  EXPECT_THROW(normalize(SignMatrix::identity(4)), std::invalid_argument);
}

TEST(Kronecker, QubProducts) {
  SignMatrix h4 = sylvester(4);
  SignMatrix k4 = SignMatrix::from_rows({{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}});
  auto out = kronecker_qub({h4, k4}, {h4, k4});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].order(), 16);
  EXPECT_TRUE(check_mutual(out, PairClassification::quasi_unbiased(16, 16)));

  SignMatrix h2 = sylvester(2);
  auto out24 = kronecker_qub({h12(), k12()}, {h2, h2});
  EXPECT_EQ(out24[0].order(), 24);
  EXPECT_TRUE(check_mutual(out24, PairClassification::quasi_unbiased(9, 64)));

  auto one = kronecker_qub({h12()}, {h2});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], kronecker(h12(), h2));
  EXPECT_THROW(kronecker_qub({h12(), k12()}, {h2}), std::invalid_argument);
}

TEST(MConstruction, Orders) {
  SignMatrix h4 = sylvester(4);
  EXPECT_TRUE(oracle::hadamard(m_construction(h4, h4)));
  SignMatrix m = m_construction(h12(), h4);
  EXPECT_EQ(m.order(), 24);
  EXPECT_TRUE(oracle::hadamard(m));
}

TEST(MConstruction, SetOfOrderEight) {
  // two order-8 matrices with (4,16) taken from the psi images of a length-8 code
  SignMatrix h8 = sylvester(8);
  auto mates = enumerate_qub_mates(h8, 4, 16);
  ASSERT_FALSE(mates.empty());
  std::vector<SignMatrix> set{h8, mates.front()};
  ASSERT_TRUE(check_mutual(set, PairClassification::quasi_unbiased(4, 16)));
  auto big = m_construction_set(set, sylvester(4));
  ASSERT_EQ(big.size(), 2u);
  EXPECT_EQ(big[0].order(), 16);
  EXPECT_TRUE(check_mutual(big, PairClassification::quasi_unbiased(4, 64)));
  auto tensor = kronecker_qub(set, {sylvester(4), sylvester(4)});
  EXPECT_TRUE(check_mutual(tensor, PairClassification::quasi_unbiased(4, 256)));
}

TEST(NegateFirstColumn, WeakPairs) {
  auto c8 = classify_pair(sylvester(8), negate_first_column(sylvester(8)));
  EXPECT_TRUE(c8.matches(PairClassification::weakly_unbiased(2, 6)));
  EXPECT_EQ(c8.n_a, 7);
  SignMatrix h24 = fixture_matrix("H24_2");
  auto c24 = classify_pair(h24, negate_first_column(h24));
  EXPECT_TRUE(c24.matches(PairClassification::weakly_unbiased(2, 22)));
  EXPECT_EQ(c24.n_a, 23);
  EXPECT_EQ(negate_first_column(negate_first_column(h24)), h24);
  EXPECT_THROW(negate_first_column(sylvester(4)), std::invalid_argument);
}

TEST(Params, Qub) {
  auto p12 = feasible_qub_params(12);
  ASSERT_EQ(p12.size(), 3u);
  EXPECT_EQ(p12[0].l, 9);
  EXPECT_EQ(p12[0].a, 16);
  EXPECT_EQ(p12[0].status, ParamStatus::Open);
  EXPECT_EQ(p12[1].l, 4);
  EXPECT_EQ(p12[1].status, ParamStatus::RuledOut);
  EXPECT_EQ(p12[2].l, 1);
  EXPECT_EQ(p12[2].a, 144);
  EXPECT_EQ(p12[2].status, ParamStatus::Open);

  auto p20 = feasible_qub_params(20);
  ASSERT_EQ(p20.size(), 2u);
  EXPECT_EQ(p20[0].status, ParamStatus::RuledOut);
  EXPECT_EQ(p20[0].reason, RuledOutReason::FourPrimeCorollary);
  EXPECT_EQ(p20[1].a, 400);

  auto p24 = feasible_qub_params(24);
  ASSERT_EQ(p24.size(), 4u);
  EXPECT_EQ(p24[0].l, 16);
  EXPECT_EQ(p24[0].reason, RuledOutReason::AlphaParityProp);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(p24[i].status, ParamStatus::Open);
}

TEST(Params, WeakSolutionsAreExact) {
  EXPECT_EQ(feasible_weak_params(16, 2), (std::vector<WeakParams>{{2, 6, 10}, {2, 10, 14}, {2, 14, 15}}));
  EXPECT_EQ(feasible_weak_params(48, 0), (std::vector<WeakParams>{{4, 8, 16}, {4, 12, 36}, {4, 20, 44}, {4, 28, 46}}));
  EXPECT_EQ(feasible_weak_params(8, 2), (std::vector<WeakParams>{{2, 6, 7}}));
  // brute force over every (a, b, n_a)
  for (int n = 8; n <= 48; n += 4)
    for (int mod : {0, 2}) {
      std::vector<WeakParams> want;
      for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int na = 1; na < n; ++na)
            if (a % 4 == mod && b % 4 == mod && a * a * na + b * b * (n - na) == n * n) want.push_back({a, b, na});
      EXPECT_EQ(feasible_weak_params(n, mod), want) << n << " " << mod;
    }
}

TEST(MatrixText, RoundTripAndRagged) {
  SignMatrix h = h12();
  EXPECT_EQ(parse_matrix(format_matrix(h)), h);
  EXPECT_THROW(parse_matrix("++\n+\n"), std::invalid_argument);
}
