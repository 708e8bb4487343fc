#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hadamard/binary_code.hpp"
#include "hadamard/z4_code.hpp"

namespace hadamard {

// What each pair of translates (binary) or each new coset (Z4) must satisfy.
//   F2 / Qub:     quasi-unbiased, one nonzero offset alpha (beta for Z4)
//   Weak:         two odd offsets, no orthogonal cross pairs
//   WeakII:       two even offsets, no orthogonal cross pairs
// Offsets left unset are fixed by the first extension.
enum class PairCondition { Qub, Weak, WeakII };

struct ClassifyOptions {
  std::string manifest_dir;  // empty: keep everything in memory
  bool resume = false;       // continue from the last finished level in manifest_dir
  std::uint64_t shuffle_seed = 0;  // nonzero: randomize candidate order
  std::function<void(const std::string&)> log;
};

struct BinaryClassSpec {
  PairCondition condition = PairCondition::Qub;
  std::vector<int> offsets;  // {alpha} or {a, b}; empty for any
  int f_max = 0;             // 0: until a level comes up empty
};

struct BinaryClass {
  std::vector<Word> translates;  // translates[0] == 0
  std::vector<int> offsets;
  BinaryCode code;
  std::string certificate;
};

struct BinaryLevel {
  int f = 0;
  std::vector<BinaryClass> classes;
  std::uint64_t candidates = 0;  // translates that passed the distance test
  std::uint64_t forms = 0;       // canonical forms computed
  double seconds = 0;
};

struct BinaryClassification {
  std::vector<BinaryLevel> levels;  // levels[0] is f = 1
  // inequivalent codes with f translates
  std::size_t count(int f) const;
};

// Codes C1 ∪ (u_2 + C1) ∪ ... ∪ (u_f + C1) up to equivalence, level by level.
// C1 must be self-complementary with distances {n/2, n}.
BinaryClassification classify_binary_extensions(const BinaryCode& c1, const BinaryClassSpec& spec,
                                                const ClassifyOptions& opts = {});

// offsets |d - n/2| seen between u + C1 and v + C1, as a bitmask; bit n/2 marks
// a shared or complementary word
std::uint64_t translate_offsets(const BinaryCode& c1, bool linear, Word u, Word v);

struct Z4Class {
  Z4LinearCode code;
  std::vector<int> values;  // distinct |n0 - n2| outside {0, n}
  bool exact = false;       // satisfies the full condition, not only the hereditary part
  std::string certificate;
};

struct Z4Level {
  int k = 0;  // log2 |C|
  std::vector<Z4Class> classes;
  std::uint64_t candidates = 0;
  std::uint64_t orbits = 0;
  double seconds = 0;
  std::size_t exact_count() const;
};

struct Z4Classification {
  int m = 0;
  std::vector<Z4Level> levels;  // levels[0] holds ZRM(1, m)
  std::size_t count(int k) const;  // exact classes of size 2^k
};

// Linear Z4 codes of length 2^m containing ZRM(1, m), grown one coset at a time.
Z4Classification classify_z4_extensions(int m, PairCondition condition, int k_max = 0,
                                        const ClassifyOptions& opts = {});

// coset representatives of C inside {x : 2x in C}, zero excluded
std::vector<Z4Word> half_transversal(const Z4LinearCode& c);

}  // namespace hadamard
