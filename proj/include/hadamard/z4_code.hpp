#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hadamard/binary_code.hpp"
#include "hadamard/graph.hpp"

namespace hadamard {

// Bitsliced vector over Z4: coordinate j holds lo_j + 2 hi_j. Length <= 32.
struct Z4Word {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  int at(int j) const { return static_cast<int>(((lo >> j) & 1u) | (((hi >> j) & 1u) << 1)); }
  void set(int j, int v);
  std::uint64_t key() const { return (static_cast<std::uint64_t>(hi) << 32) | lo; }
  bool operator==(const Z4Word&) const = default;
};

inline Z4Word operator+(Z4Word a, Z4Word b) {
  return {a.lo ^ b.lo, a.hi ^ b.hi ^ (a.lo & b.lo)};
}
inline Z4Word operator-(Z4Word a) { return {a.lo, a.hi ^ a.lo}; }
inline Z4Word operator-(Z4Word a, Z4Word b) { return a + (-b); }
inline Z4Word twice(Z4Word a) { return {0, a.lo}; }

inline std::uint32_t z4_mask(int n) { return n >= 32 ? ~0u : (1u << n) - 1; }

// n0(x) - n2(x)
int z4_balance(Z4Word x, int n);
int lee_weight(Z4Word x);
int hamming_weight(Z4Word x);

Z4Word z4_from_string(std::string_view digits);
std::string z4_to_string(Z4Word x, int n);

class Z4LinearCode {
 public:
  static constexpr std::size_t kMaxWords = std::size_t{1} << 14;

  Z4LinearCode() = default;
  // enumerates the span; throws when it exceeds kMaxWords
  Z4LinearCode(int n, std::vector<Z4Word> generators);

  int length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  int log2_size() const;
  const std::vector<Z4Word>& generators() const { return gens_; }
  const std::vector<Z4Word>& words() const { return words_; }
  bool contains(Z4Word x) const;

  // residue code {c mod 2} and torsion code {v : 2v in C}
  std::vector<Word> residue_basis() const;
  std::vector<Word> torsion_basis() const;
  // k1 rows of order 4 then k2 rows of order 2
  std::vector<Z4Word> standard_form() const;
  std::pair<int, int> type() const;

  Z4LinearCode extend(Z4Word x) const;

 private:
  int n_ = 0;
  std::vector<Z4Word> gens_;
  std::vector<Z4Word> words_;
  std::vector<std::uint64_t> sorted_;
};

DistanceDistribution lee_distribution(const Z4LinearCode& c);
DistanceDistribution hamming_distribution(const Z4LinearCode& c);
int min_hamming_distance(const Z4LinearCode& c);
int min_lee_distance(const Z4LinearCode& c);

// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10; coordinate j goes to bits 2j, 2j+1
Word gray_word(Z4Word x, int n);
BinaryCode gray_map(const Z4LinearCode& c);

std::vector<Z4Word> zrm_generators(int m);
Z4LinearCode zrm_fixture(int m);  // m = 2, 3, 4
// Kerdock code of length 16 from the trace over GR(4,4)
Z4LinearCode kerdock_fixture();

std::optional<int> check_z4_qub(const Z4LinearCode& c);
enum class Parity { Odd, Even };
std::optional<std::pair<int, int>> check_z4_weak(const Z4LinearCode& c, Parity parity);

// codeword vertices (color 0) then (j,1),(j,2),(j,3) per coordinate (color 1)
ColoredGraph gamma_digraph(const Z4LinearCode& c);
std::string z4_certificate(const Z4LinearCode& c);
bool z4_equivalent(const Z4LinearCode& a, const Z4LinearCode& b);

// applies a coordinate permutation (j -> perm[j]) and negates coordinates in flips
Z4LinearCode z4_transform(const Z4LinearCode& c, const std::vector<int>& perm, std::uint32_t flips);

// "n k" header then k generator lines over {0,1,2,3}
Z4LinearCode parse_z4_code(std::string_view text);
Z4LinearCode read_z4_code_file(const std::string& path);
std::string format_z4_code(const Z4LinearCode& c);

// binary helpers shared with the classifier
std::vector<Word> echelon_basis(std::vector<Word> vectors, int n);
// coset representatives of span(sub) inside span(super)
std::vector<Word> complement_basis(const std::vector<Word>& sub, const std::vector<Word>& super, int n);

}  // namespace hadamard
