#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hadamard/sign_matrix.hpp"

namespace hadamard {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Coordinate j (0-based) of a word is bit j.
using Word = std::uint64_t;

inline Word low_mask(int n) { return n >= 64 ? ~Word{0} : (Word{1} << n) - 1; }

// Lexicographic order on the coordinate string (coordinate 0 most significant).
bool lex_less(Word x, Word y);

class BinaryCode {
 public:
  BinaryCode() = default;
  // throws on duplicate words or n outside 1..64
  BinaryCode(int n, std::vector<Word> words);

  int length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  bool contains(Word w) const;

 private:
  int n_ = 0;
  std::vector<Word> words_;
  std::vector<Word> sorted_;
};

struct DistanceDistribution {
  int n = 0;
  std::vector<Rational> counts;  // A_0 .. A_n

  std::vector<int> support() const;  // i >= 1 with A_i != 0
  int degree() const { return static_cast<int>(support().size()); }
  bool operator==(const DistanceDistribution&) const = default;
  std::string to_string() const;
};

// Unordered pair counts by distance; the kernel behind distance_distribution.
std::vector<std::uint64_t> distance_pair_counts(const std::vector<Word>& words, int n);
std::vector<std::uint64_t> distance_pair_counts_serial(const std::vector<Word>& words, int n);

DistanceDistribution distance_distribution(const BinaryCode& c);
DistanceDistribution distribution_from_counts(int n, const std::vector<std::int64_t>& counts);
bool is_self_complementary(const BinaryCode& c);
int min_distance(const BinaryCode& c);

BinaryCode code_of_hadamard(const SignMatrix& h);
// union of the Hadamard codes of the members; no normalization applied
BinaryCode matrices_to_code(const std::vector<SignMatrix>& ms);

Word word_from_string(std::string_view bits);
std::string word_to_string(Word w, int n);
Word word_from_support(const std::vector<int>& support_1based);
std::vector<int> support_of(Word w, int n);  // 1-based

BinaryCode span(int n, const std::vector<Word>& generators);
// u_1 + C ∪ ... ∪ u_k + C
BinaryCode union_of_translates(const BinaryCode& c, const std::vector<Word>& translates);

// Fixed generator matrices (m = 3, 4, 5); the m = 5 matrix uses a permuted basis.
std::vector<Word> rm_generators(int m);
BinaryCode rm_fixture(int m);

// Partition of the code into antipodal Hadamard blocks: each block is a list
// of word indices forming a code with distribution (1, 2n-2, 1).
using BlockPartition = std::vector<std::vector<std::size_t>>;

std::optional<BlockPartition> find_block_decomposition(const BinaryCode& c, std::size_t blocks,
                                                       std::uint64_t node_budget = 50'000'000);
bool is_valid_decomposition(const BinaryCode& c, const BlockPartition& p);

std::vector<SignMatrix> psi_matrices(const BinaryCode& c);
std::vector<SignMatrix> psi_matrices(const BinaryCode& c, const BlockPartition& p);
SignMatrix psi_block(const BinaryCode& c, const std::vector<std::size_t>& block);

bool check_F2(const BinaryCode& c, int alpha, int f);
bool check_weakF2(const BinaryCode& c, int a, int b);
bool check_weakF2(int n, const std::vector<Word>& words, int a, int b);
bool check_weakIIF2(const BinaryCode& c, int a, int b, int f);

DistanceDistribution predicted_distribution(int n, int f, int l);

// Code files: "n M" header then M lines of n bits; or "supp: i j k" lines.
BinaryCode parse_code(std::string_view text);
BinaryCode read_code_file(const std::string& path);
std::string format_code(const BinaryCode& c);
// supports only; each "supp:" line becomes a word
std::vector<Word> parse_support_list(std::string_view text, int* n_out = nullptr);

}  // namespace hadamard
