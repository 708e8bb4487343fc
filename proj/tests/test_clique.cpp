#include <gtest/gtest.h>

#include "hadamard/clique.hpp"
#include "hadamard/fixtures.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {

struct Graph {
  AdjMatrix adj;
  std::vector<std::vector<bool>> dense;
};

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  std::vector<std::vector<bool>> d(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) {
        e.push_back({u, v});
        d[u][v] = d[v][u] = true;
      }
  return {adjacency_from_edges(n, e), d};
}

bool is_clique(const AdjMatrix& adj, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!adj[vs[i]].test(vs[j])) return false;
  return true;
}

std::uint64_t row_mask(const SignMatrix& k, int i) {
  std::uint64_t m = 0;
  int s = k.at(i, 0);
  for (int j = 0; j < k.order(); ++j)
    if (s * k.at(i, j) < 0) m |= std::uint64_t{1} << j;
  return m;
}

}  // namespace

TEST(MaxClique, SmallGraphs) {
  std::vector<std::pair<int, int>> k5;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.push_back({u, v});
  auto r = max_clique(adjacency_from_edges(5, k5));
  EXPECT_EQ(r.size, 5);
  EXPECT_EQ(r.witness, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(r.exhausted);
  EXPECT_EQ(max_clique(adjacency_from_edges(6, {})).size, 1);
  EXPECT_EQ(max_clique(AdjMatrix{}).size, 0);
  // C5 has clique number 2
  EXPECT_EQ(max_clique(adjacency_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})).size, 2);
}

TEST(MaxClique, AgreesWithSubsetDp) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + static_cast<int>(rng() % 20);
    auto g = random_graph(n, 0.2 + 0.7 * (rng() % 100) / 100.0, rng);
    int want = oracle::max_clique(g.dense);
    auto par = max_clique(g.adj);
    auto ser = max_clique_serial(g.adj);
    ASSERT_EQ(par.size, want) << t;
    ASSERT_EQ(ser.size, want) << t;
    EXPECT_TRUE(is_clique(g.adj, par.witness));
    EXPECT_EQ(static_cast<int>(par.witness.size()), want);
    EXPECT_TRUE(std::is_sorted(par.witness.begin(), par.witness.end()));
  }
}

TEST(MaxClique, LargerGraphsSerialMatchesParallel) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 10; ++t) {
    auto g = random_graph(120, 0.6, rng);
    auto a = max_clique(g.adj), b = max_clique_serial(g.adj);
    EXPECT_EQ(a.size, b.size);
    EXPECT_TRUE(is_clique(g.adj, a.witness));
  }
}

TEST(MaxClique, BudgetMarksExhausted) {
  std::mt19937_64 rng(11);
  auto g = random_graph(150, 0.8, rng);
  auto r = max_clique(g.adj, 50);
  EXPECT_TRUE(r.exhausted);
  EXPECT_TRUE(is_clique(g.adj, r.witness));
}

TEST(FindClique, StopsAtTarget) {
  std::mt19937_64 rng(12);
  auto g = random_graph(40, 0.7, rng);
  int w = max_clique(g.adj).size;
  auto hit = find_clique(g.adj, w);
  ASSERT_TRUE(hit);
  EXPECT_EQ(static_cast<int>(hit->size()), w);
  EXPECT_TRUE(is_clique(g.adj, *hit));
  EXPECT_FALSE(find_clique(g.adj, w + 1));
}

TEST(MateCandidates, ParallelMatchesSerial) {
  for (const char* name : {"H8", "H12", "H16", "H20_1"}) {
    SignMatrix h = fixture_matrix(name);
    int n = h.order();
    for (auto allowed : std::vector<std::vector<int>>{{2, 6}, {0, 4}, {4, 8}, {2, n - 2}})
      for (int part = 0; part < 4; ++part) {
        auto a = mate_candidates(h, allowed, part), b = mate_candidates_serial(h, allowed, part);
        std::sort(a.begin(), a.end());
        EXPECT_EQ(a, b) << name << " part " << part;
      }
  }
}

TEST(MateCandidates, FilterKeepsEveryRowOfAKnownMate) {
  for (const char* name : {"H8", "H12", "H24_2"}) {
    SignMatrix h = fixture_matrix(name);
    int n = h.order();
    SignMatrix k = negate_first_column(h);
    std::vector<int> allowed{2, n - 2};
    std::array<std::vector<std::uint64_t>, 4> parts;
    for (int p = 0; p < 4; ++p) parts[p] = mate_candidates_serial(h, allowed, p);
    for (int i = 0; i < n; ++i) {
      std::uint64_t m = row_mask(k, i);
      int part = static_cast<int>(((m >> 1) & 1) << 1 | ((m >> 2) & 1));
      EXPECT_TRUE(std::binary_search(parts[part].begin(), parts[part].end(), m)) << name << " row " << i;
    }
  }
}

TEST(MateGraph, OrderEightWeakPair) {
  SignMatrix h8 = sylvester(8);
  MateGraph g = build_mate_graph(h8, std::array<int, 2>{2, 6});
  EXPECT_EQ(max_clique(g.adj).size, 8);
  EXPECT_TRUE(prescreen(g).passed());
  for (auto strategy : {MateStrategy::Clique, MateStrategy::Backtrack}) {
    auto k = find_mate(h8, {2, 6}, strategy);
    ASSERT_TRUE(k);
    EXPECT_TRUE(classify_pair(h8, *k).matches(PairClassification::weakly_unbiased(2, 6)));
  }
  std::uint64_t seen = enumerate_mates(g, [&](const std::vector<std::size_t>& vs) {
    std::vector<std::uint64_t> rows;
    for (auto v : vs) rows.push_back(g.vertices[v]);
    EXPECT_TRUE(classify_pair(h8, matrix_from_rows(8, rows)).matches(PairClassification::weakly_unbiased(2, 6)));
    return true;
  });
  EXPECT_GT(seen, 0u);
}

TEST(MateGraph, OrderTwelve) {
  SignMatrix h12 = fixture_matrix("H12");
  auto w = find_mate(h12, {2, 10}, MateStrategy::Clique);
  ASSERT_TRUE(w);
  EXPECT_TRUE(classify_pair(h12, *w).matches(PairClassification::weakly_unbiased(2, 10)));
  auto k = find_qub_mate(h12, 9, 16);
  ASSERT_TRUE(k);
  EXPECT_TRUE(classify_pair(h12, *k).matches(PairClassification::quasi_unbiased(9, 16)));
  EXPECT_FALSE(find_qub_mate(h12, 4, 36));
}

TEST(MateGraph, OrderTwelveMates) {
  SignMatrix h12 = fixture_matrix("H12");
  auto mates = enumerate_qub_mates(h12, 9, 16);
  EXPECT_FALSE(mates.empty());
  for (const auto& k : mates) ASSERT_TRUE(classify_pair(h12, k).matches(PairClassification::quasi_unbiased(9, 16)));
  EXPECT_FALSE(any_mutual_pair(mates, 9, 16));
}
