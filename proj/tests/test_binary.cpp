#include <gtest/gtest.h>

#include "hadamard/binary_code.hpp"
#include "hadamard/core.hpp"
#include "hadamard/fixtures.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {

std::vector<std::int64_t> integer_counts(const DistanceDistribution& d) {
  std::vector<std::int64_t> v;
  for (const auto& a : d.counts) {
    EXPECT_EQ(denominator(a), 1);
    v.push_back(static_cast<std::int64_t>(numerator(a)));
  }
  return v;
}

// A_i = pairs / |C| from the oracle
std::vector<Rational> oracle_distribution(const BinaryCode& c) {
  std::vector<Rational> out;
  for (long k : oracle::distance_pairs(c.words(), c.length())) out.push_back(Rational(k, static_cast<long>(c.size())));
  return out;
}

BinaryCode hadamard_code(const std::string& name) { return code_of_hadamard(normalize(fixture_matrix(name))); }

}  // namespace

TEST(Distribution, HadamardCodes) {
  for (const char* name : {"H8", "H12", "H20_1", "H24_2"}) {
    BinaryCode c = hadamard_code(name);
    int n = c.length();
    EXPECT_EQ(c.size(), static_cast<std::size_t>(2 * n));
    auto d = distance_distribution(c);
    EXPECT_EQ(d.counts, oracle_distribution(c)) << name;
    EXPECT_EQ(d.support(), (std::vector<int>{n / 2, n}));
    EXPECT_EQ(d.counts[n / 2], Rational(2 * n - 2));
    EXPECT_TRUE(is_self_complementary(c));
    EXPECT_EQ(min_distance(c), n / 2);
  }
}

TEST(Distribution, TabledWeakCodes) {
  EXPECT_EQ(integer_counts(distance_distribution(fixture_binary_code("D8,1"))),
            (std::vector<std::int64_t>{1, 1, 0, 7, 14, 7, 0, 1, 1}));
  EXPECT_EQ(integer_counts(distance_distribution(fixture_binary_code("D12,2"))),
            (std::vector<std::int64_t>{1, 0, 0, 3, 0, 9, 22, 9, 0, 3, 0, 0, 1}));
}

TEST(Distribution, SingletonAndEmpty) {
  auto d = distance_distribution(BinaryCode(5, {0b10110}));
  EXPECT_EQ(d.counts[0], Rational(1));
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(d.counts[i], Rational(0));
  EXPECT_EQ(d.degree(), 0);
  EXPECT_THROW(distance_distribution(BinaryCode(5, {})), std::invalid_argument);
}

TEST(Distribution, ParallelMatchesSerial) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    int n = 10 + static_cast<int>(rng() % 40);
    std::set<Word> s;
    while (s.size() < 300) s.insert(rng() & low_mask(n));
    std::vector<Word> w(s.begin(), s.end());
    EXPECT_EQ(distance_pair_counts(w, n), distance_pair_counts_serial(w, n));
  }
}

TEST(SelfComplementary, Examples) {
  EXPECT_FALSE(is_self_complementary(BinaryCode(6, {0})));
  EXPECT_TRUE(is_self_complementary(BinaryCode(6, {0, low_mask(6)})));
  EXPECT_TRUE(is_self_complementary(rm_fixture(4)));
}

TEST(CodeOfHadamard, Basics) {
  BinaryCode c2 = code_of_hadamard(sylvester(2));
  std::vector<Word> w(c2.words());
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::vector<Word>{0, 1, 2, 3}));
  BinaryCode c12 = hadamard_code("H12");
  EXPECT_EQ(c12.size(), 24u);
  EXPECT_EQ(distance_distribution(c12).support(), (std::vector<int>{6, 12}));
  EXPECT_THROW(code_of_hadamard(fixture_matrix("H12").negate_row(0).negate_row(1)), std::invalid_argument);
}

TEST(Psi, RoundTrip) {
  for (const char* name : {"H8", "H12", "H20_1", "H24_2"}) {
    SignMatrix h = normalize(fixture_matrix(name));
    auto ms = psi_matrices(code_of_hadamard(h));
    ASSERT_EQ(ms.size(), 1u);
    auto c = classify_pair(h, ms[0]);
    EXPECT_EQ(c.kind, PairKind::QuasiUnbiased);
    EXPECT_EQ(c.l, 1) << name;
  }
}

TEST(Psi, LengthEightCode) {
  auto ms = psi_matrices(fixture_binary_code("B8,1,1"));
  ASSERT_EQ(ms.size(), 2u);
  for (const auto& m : ms) EXPECT_TRUE(oracle::hadamard(m));
  EXPECT_TRUE(check_mutual(ms, PairClassification::quasi_unbiased(4, 16)));
}

TEST(Psi, C24GivesSixteenMatrices) {
  BinaryCode c = fixture_binary_code("C24");
  EXPECT_EQ(c.size(), 768u);
  auto ms = psi_matrices(c);
  ASSERT_EQ(ms.size(), 16u);
  EXPECT_TRUE(check_mutual(ms, PairClassification::quasi_unbiased(9, 64)));
}

TEST(CheckF2, Examples) {
  EXPECT_TRUE(check_F2(fixture_binary_code("B16,7,3"), 2, 8));
  EXPECT_FALSE(check_F2(fixture_binary_code("B16,7,3"), 4, 8));
  EXPECT_FALSE(check_F2(hadamard_code("H12"), 2, 1));
  EXPECT_TRUE(check_F2(fixture_binary_code("C24"), 4, 16));
  EXPECT_EQ(min_distance(fixture_binary_code("C24")), 8);
}

TEST(CheckF2, MatricesToCodeReverseDirection) {
  SignMatrix h12 = fixture_matrix("H12"), k12 = fixture_matrix("K12");
  BinaryCode c = matrices_to_code({h12, k12});
  EXPECT_TRUE(check_F2(c, 2, 2));
  auto ms = psi_matrices(fixture_binary_code("B16,4,1"));
  EXPECT_TRUE(check_F2(matrices_to_code(ms), 4, 5));
}

TEST(PredictedDistribution, Formula) {
  auto d = predicted_distribution(24, 16, 9);
  EXPECT_EQ(d.counts[8], Rational(135));
  EXPECT_EQ(d.counts[12], Rational(496));
  EXPECT_EQ(d.counts[16], Rational(135));
  Rational total = 0;
  for (const auto& a : d.counts) total += a;
  EXPECT_EQ(total, Rational(768));
  EXPECT_EQ(d, distance_distribution(fixture_binary_code("C24")));

  auto one = predicted_distribution(12, 1, 9);
  EXPECT_EQ(one.support(), (std::vector<int>{6, 12}));
  EXPECT_EQ(one.counts[6], Rational(22));

  auto d8 = predicted_distribution(8, 8, 4);
  EXPECT_EQ(integer_counts(d8), (std::vector<std::int64_t>{1, 0, 28, 0, 70, 0, 28, 0, 1}));
  EXPECT_EQ(d8, distance_distribution(fixture_binary_code("B8,7,1")));
}

TEST(PredictedDistribution, EveryTabledCode) {
  for (const char* name : {"B8,1,1", "B8,3,2", "B16,1,2", "B16,3,3", "B16,5,3", "B16,7,1"}) {
    BinaryCode c = fixture_binary_code(name);
    int n = c.length(), f = static_cast<int>(c.size()) / (2 * n);
    int alpha = n / 2 - min_distance(c);
    int root = n / (2 * alpha);
    EXPECT_TRUE(check_F2(c, alpha, f)) << name;
    EXPECT_EQ(distance_distribution(c), predicted_distribution(n, f, root * root)) << name;
  }
}

TEST(CheckWeakF2, Examples) {
  BinaryCode d121 = fixture_binary_code("D12,1");
  EXPECT_TRUE(check_weakF2(d121, 1, 5));
  auto ms = psi_matrices(d121);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_TRUE(classify_pair(ms[0], ms[1]).matches(PairClassification::weakly_unbiased(2, 10)));
  EXPECT_TRUE(check_weakF2(fixture_binary_code("D12,2"), 1, 3));
  EXPECT_FALSE(check_weakF2(fixture_binary_code("D12,2"), 1, 5));
  // duplicated words are not a code
  BinaryCode c = hadamard_code("H12");
  std::vector<Word> twice(c.words());
  twice.insert(twice.end(), c.words().begin(), c.words().end());
  EXPECT_FALSE(check_weakF2(12, twice, 1, 5));
}

TEST(CheckWeakIIF2, Examples) {
  BinaryCode g = gray_map(fixture_z4("Cp16_2_1.z4"));
  EXPECT_EQ(g.length(), 32);
  EXPECT_TRUE(check_weakIIF2(g, 2, 6, 4));
  auto ms = psi_matrices(g);
  ASSERT_EQ(ms.size(), 4u);
  EXPECT_TRUE(check_mutual(ms, PairClassification::type2(4, 12)));
  EXPECT_FALSE(check_weakIIF2(g, 2, 6, 1));
  EXPECT_FALSE(check_weakIIF2(fixture_binary_code("B16,7,3"), 2, 6, 8));
}

TEST(RmFixture, Sizes) {
  BinaryCode r3 = rm_fixture(3), r4 = rm_fixture(4), r5 = rm_fixture(5);
  EXPECT_EQ(r3.size(), 16u);
  EXPECT_EQ(r3.length(), 8);
  EXPECT_EQ(integer_counts(distance_distribution(r3)), (std::vector<std::int64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1}));
  EXPECT_EQ(r4.size(), 32u);
  EXPECT_EQ(r5.size(), 64u);
  EXPECT_EQ(r5.length(), 32);
  EXPECT_THROW(rm_fixture(6), std::invalid_argument);
}

TEST(MinDistance, TabledCodes) {
  for (const char* name : {"B8,1,1", "B8,2,1", "B8,3,1", "B8,3,2", "B8,4,1", "B8,5,1", "B8,6,1", "B8,7,1"})
    EXPECT_EQ(min_distance(fixture_binary_code(name)), 2) << name;
  EXPECT_EQ(min_distance(fixture_binary_code("B16,1,2")), 6);
  EXPECT_THROW(min_distance(BinaryCode(4, {1})), std::invalid_argument);
}

TEST(CodeText, RoundTrip) {
  BinaryCode c = fixture_binary_code("B8,3,2");
  BinaryCode back = parse_code(format_code(c));
  EXPECT_EQ(back.words(), c.words());
  EXPECT_EQ(parse_support_list("n 8\nsupp: 1 4\nsupp:\n"), (std::vector<Word>{word_from_support({1, 4}), 0}));
}
