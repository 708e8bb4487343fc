#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "hadamard/canonical.hpp"
#include "hadamard/classify.hpp"
#include "hadamard/fixtures.hpp"

using namespace hadamard;
namespace fs = std::filesystem;

namespace {

std::vector<std::size_t> counts(const BinaryClassification& r) {
  std::vector<std::size_t> v;
  for (const auto& lv : r.levels) v.push_back(lv.classes.size());
  return v;
}

std::vector<std::size_t> counts(const Z4Classification& r) {
  std::vector<std::size_t> v;
  for (const auto& lv : r.levels) v.push_back(lv.exact_count());
  return v;
}

std::set<std::string> certificates(const BinaryLevel& lv) {
  std::set<std::string> s;
  for (const auto& c : lv.classes) s.insert(c.certificate);
  return s;
}

BinaryClassSpec qub(int f_max = 0) { return {PairCondition::Qub, {}, f_max}; }
BinaryClassSpec weak() { return {PairCondition::Weak, {}, 2}; }

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("hadamard_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(ClassifyBinary, ReedMullerLengthEight) {
  auto r = classify_binary_extensions(rm_fixture(3), qub());
  EXPECT_EQ(counts(r), (std::vector<std::size_t>{1, 1, 1, 2, 1, 1, 1, 1, 0}));
  for (int f = 1; f <= 8; ++f) EXPECT_EQ(r.count(f), f == 4 ? 2u : 1u);
  EXPECT_EQ(r.count(9), 0u);
}

TEST(ClassifyBinary, HadamardTwelveHasNoExtension) {
  auto r = classify_binary_extensions(seed_code("H12"), qub(2));
  EXPECT_EQ(r.count(2), 0u);
}

TEST(ClassifyBinary, WeakCounts) {
  EXPECT_EQ(classify_binary_extensions(rm_fixture(3), weak()).count(2), 1u);
  EXPECT_EQ(classify_binary_extensions(seed_code("H12"), weak()).count(2), 2u);
}

TEST(ClassifyBinary, RepresentativesSatisfyTheCondition) {
  auto r = classify_binary_extensions(rm_fixture(3), qub());
  for (const auto& lv : r.levels)
    for (const auto& c : lv.classes) {
      ASSERT_EQ(c.translates.front(), 0u);
      EXPECT_EQ(c.code.size(), static_cast<std::size_t>(16 * lv.f));
      if (lv.f > 1) {
        ASSERT_EQ(c.offsets.size(), 1u);
        EXPECT_TRUE(check_F2(c.code, c.offsets[0], lv.f)) << lv.f;
      }
    }
  auto w = classify_binary_extensions(seed_code("H12"), weak());
  for (const auto& c : w.levels[1].classes) {
    ASSERT_EQ(c.offsets.size(), 2u);
    EXPECT_TRUE(check_weakF2(c.code, c.offsets[0], c.offsets[1]));
  }
}

TEST(ClassifyBinary, ClassesArePairwiseInequivalent) {
  auto r = classify_binary_extensions(rm_fixture(3), qub());
  for (const auto& lv : r.levels) {
    EXPECT_EQ(certificates(lv).size(), lv.classes.size());
    std::set<std::string> incidence;
    for (const auto& c : lv.classes) {
      EXPECT_EQ(c.certificate, code_certificate(c.code));
      incidence.insert(code_canonical_form(c.code));
    }
    EXPECT_EQ(incidence.size(), lv.classes.size()) << lv.f;
  }
}

TEST(ClassifyBinary, DroppingATranslateLandsOneLevelDown) {
  auto r = classify_binary_extensions(rm_fixture(3), qub());
  BinaryCode seed = rm_fixture(3);
  for (std::size_t i = 2; i < r.levels.size(); ++i) {
    auto below = certificates(r.levels[i - 1]);
    for (const auto& c : r.levels[i].classes)
      for (std::size_t drop = 0; drop < c.translates.size(); ++drop) {
        std::vector<Word> ts;
        for (std::size_t t = 0; t < c.translates.size(); ++t)
          if (t != drop) ts.push_back(c.translates[t]);
        EXPECT_TRUE(below.count(code_certificate(union_of_translates(seed, ts)))) << "f=" << r.levels[i].f;
      }
  }
}

TEST(ClassifyBinary, ShuffledOrderGivesTheSameClasses) {
  auto base = classify_binary_extensions(rm_fixture(3), qub());
  for (std::uint64_t seed : {7u, 1234u}) {
    ClassifyOptions o;
    o.shuffle_seed = seed;
    auto r = classify_binary_extensions(rm_fixture(3), qub(), o);
    ASSERT_EQ(counts(r), counts(base));
    for (std::size_t i = 0; i < r.levels.size(); ++i) EXPECT_EQ(certificates(r.levels[i]), certificates(base.levels[i]));
  }
  ClassifyOptions o;
  o.shuffle_seed = 99;
  auto w = classify_binary_extensions(seed_code("H12"), weak(), o);
  EXPECT_EQ(w.count(2), 2u);
}

TEST(ClassifyBinary, ResumeFromManifest) {
  fs::path dir = scratch_dir("binary");
  ClassifyOptions o;
  o.manifest_dir = dir.string();
  auto part = classify_binary_extensions(rm_fixture(3), qub(4), o);
  EXPECT_EQ(part.levels.size(), 4u);
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
  o.resume = true;
  std::vector<std::string> log;
  o.log = [&](const std::string& s) { log.push_back(s); };
  auto full = classify_binary_extensions(rm_fixture(3), qub(), o);
  EXPECT_EQ(counts(full), (std::vector<std::size_t>{1, 1, 1, 2, 1, 1, 1, 1, 0}));
  bool resumed = false;
  for (const auto& s : log) resumed |= s.find("resumed") != std::string::npos;
  EXPECT_TRUE(resumed);
  auto fresh = classify_binary_extensions(rm_fixture(3), qub());
  for (std::size_t i = 0; i < fresh.levels.size(); ++i) EXPECT_EQ(certificates(full.levels[i]), certificates(fresh.levels[i]));
  // a manifest from another seed is refused
  EXPECT_THROW(classify_binary_extensions(seed_code("H8"), weak(), o), std::runtime_error);
  fs::remove_all(dir);
}

TEST(TranslateOffsets, SharedWordsAreFlagged) {
  BinaryCode c = rm_fixture(3);
  EXPECT_TRUE(translate_offsets(c, true, 0, c.words()[1]) >> 4 & 1);
  std::uint64_t m = translate_offsets(c, true, 0, word_from_support({1}));
  EXPECT_EQ(m, (std::uint64_t{1} << 1) | (std::uint64_t{1} << 3));
}

TEST(ClassifyZ4, LengthSixteenEvenWeak) {
  auto r = classify_z4_extensions(4, PairCondition::WeakII);
  EXPECT_EQ(r.count(7), 1u);
  EXPECT_EQ(r.count(8), 3u);
  EXPECT_EQ(r.count(9), 0u);
  std::set<std::string> found;
  for (const auto& lv : r.levels)
    for (const auto& c : lv.classes)
      if (c.exact) found.insert(c.certificate);
  for (const char* f : {"Cp16_1.z4", "Cp16_2_1.z4", "Cp16_2_2.z4", "Cp16_2_3.z4"})
    EXPECT_TRUE(found.count(z4_certificate(fixture_z4(f)))) << f;
}

TEST(ClassifyZ4, NoOddWeakCodes) {
  for (int m : {3, 4}) {
    auto r = classify_z4_extensions(m, PairCondition::Weak);
    std::size_t total = 0;
    for (const auto& lv : r.levels) total += lv.exact_count();
    EXPECT_EQ(total, 0u) << m;
  }
}

TEST(ClassifyZ4, LengthEightQub) {
  auto r = classify_z4_extensions(3, PairCondition::Qub);
  ASSERT_FALSE(r.levels.empty());
  EXPECT_EQ(r.levels[0].k, 5);
  for (const auto& lv : r.levels) {
    std::set<std::string> certs;
    for (const auto& c : lv.classes) {
      certs.insert(c.certificate);
      EXPECT_EQ(c.code.log2_size(), lv.k);
      if (c.exact) EXPECT_TRUE(check_z4_qub(c.code).has_value());
    }
    EXPECT_EQ(certs.size(), lv.classes.size());
  }
  ClassifyOptions o;
  o.shuffle_seed = 5;
  EXPECT_EQ(counts(classify_z4_extensions(3, PairCondition::Qub, 0, o)), counts(r));
}

TEST(ClassifyZ4, ResumeFromManifest) {
  fs::path dir = scratch_dir("z4");
  ClassifyOptions o;
  o.manifest_dir = dir.string();
  auto part = classify_z4_extensions(4, PairCondition::WeakII, 7, o);
  EXPECT_EQ(part.count(7), 1u);
  o.resume = true;
  auto full = classify_z4_extensions(4, PairCondition::WeakII, 0, o);
  EXPECT_EQ(full.count(8), 3u);
  EXPECT_EQ(full.count(9), 0u);
  auto fresh = classify_z4_extensions(4, PairCondition::WeakII);
  ASSERT_EQ(full.levels.size(), fresh.levels.size());
  for (std::size_t i = 0; i < full.levels.size(); ++i) {
    std::set<std::string> a, b;
    for (const auto& c : full.levels[i].classes) a.insert(c.certificate);
    for (const auto& c : fresh.levels[i].classes) b.insert(c.certificate);
    EXPECT_EQ(a, b) << full.levels[i].k;
  }
  fs::remove_all(dir);
}

TEST(HalfTransversal, ZrmLengthEight) {
  Z4LinearCode z = zrm_fixture(3);
  auto reps = half_transversal(z);
  std::set<std::uint64_t> cosets;
  for (auto x : reps) {
    EXPECT_FALSE(z.contains(x));
    EXPECT_TRUE(z.contains(twice(x)));
    std::uint64_t least = ~0ULL;
    for (auto w : z.words()) least = std::min(least, (x + w).key());
    cosets.insert(least);
  }
  EXPECT_EQ(cosets.size(), reps.size());
}
