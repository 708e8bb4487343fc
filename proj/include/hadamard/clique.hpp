#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hadamard/bitset.hpp"
#include "hadamard/core.hpp"

namespace hadamard {

using AdjMatrix = std::vector<Bits>;

AdjMatrix adjacency_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

struct CliqueResult {
  int size = 0;
  std::vector<int> witness;  // ascending vertex indices
  bool exhausted = false;    // budget ran out; size is then only a lower bound
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultCliqueBudget = 2'000'000'000ULL;

// Branch and bound with greedy-coloring bounds over bitsets.
CliqueResult max_clique(const AdjMatrix& adj, std::uint64_t budget = kDefaultCliqueBudget);
CliqueResult max_clique_serial(const AdjMatrix& adj, std::uint64_t budget = kDefaultCliqueBudget);
// stops at the first clique of size k
std::optional<std::vector<int>> find_clique(const AdjMatrix& adj, int k,
                                            std::uint64_t budget = kDefaultCliqueBudget);

// Candidate rows x with first three entries fixed to Y_1..Y_4 and every
// |x . h_i| in the allowed set; adjacent when orthogonal.
struct MateGraph {
  int n = 0;
  std::vector<std::uint64_t> vertices;  // bit j set when x_j = -1
  std::array<std::size_t, 5> part_begin{};
  AdjMatrix adj;

  std::size_t size() const { return vertices.size(); }
  std::size_t part_size(int j) const { return part_begin[j + 1] - part_begin[j]; }
  std::vector<int> row(std::size_t v) const;
};

inline constexpr int kMaxMateOrder = 32;

// candidates of part j (0..3) in Gray-code order
std::vector<std::uint64_t> mate_candidates(const SignMatrix& h, const std::vector<int>& allowed_abs, int part);
// plain recomputation for every candidate, ascending
std::vector<std::uint64_t> mate_candidates_serial(const SignMatrix& h, const std::vector<int>& allowed_abs, int part);

MateGraph build_mate_graph(const SignMatrix& h, const std::vector<int>& allowed_abs);
MateGraph build_mate_graph(const SignMatrix& h, std::array<int, 2> sigma);

SignMatrix matrix_from_rows(int n, const std::vector<std::uint64_t>& rows);

// n-cliques taking n/4 vertices from each part; visit returns false to stop.
// Returns the number visited.
std::uint64_t enumerate_mates(const MateGraph& g, const std::function<bool(const std::vector<std::size_t>&)>& visit,
                              std::uint64_t budget = kDefaultCliqueBudget);

// each part-induced subgraph has an (n/4)-clique
struct Prescreen {
  std::array<bool, 4> part_ok{};
  bool passed() const { return part_ok[0] && part_ok[1] && part_ok[2] && part_ok[3]; }
};
Prescreen prescreen(const MateGraph& g);

enum class MateStrategy { Backtrack, Clique };

std::optional<SignMatrix> find_mate(const SignMatrix& h, std::array<int, 2> sigma,
                                    MateStrategy strategy = MateStrategy::Clique);
std::optional<SignMatrix> find_qub_mate(const SignMatrix& h, std::int64_t l, std::int64_t a);
// all mates with rows normalized to a leading + and grouped by the second and third entries
std::vector<SignMatrix> enumerate_qub_mates(const SignMatrix& h, std::int64_t l, std::int64_t a);
// true when some pair of candidates is itself quasi-unbiased with (l, a)
bool any_mutual_pair(const std::vector<SignMatrix>& mates, std::int64_t l, std::int64_t a);

}  // namespace hadamard
