#include <algorithm>
#include <bit>
#include <unordered_map>

#include "hadamard/binary_code.hpp"
#include "hadamard/bitset.hpp"
#include "hadamard/errors.hpp"

namespace hadamard {

bool is_valid_decomposition(const BinaryCode& c, const BlockPartition& p) {
  int n = c.length();
  std::vector<int> seen(c.size(), 0);
  for (const auto& b : p) {
    if (b.size() != static_cast<std::size_t>(2 * n)) return false;
    for (std::size_t i : b) {
      if (i >= c.size() || seen[i]++) return false;
    }
    for (std::size_t x = 0; x < b.size(); ++x) {
      int far = 0;
      for (std::size_t y = x + 1; y < b.size(); ++y) {
        int d = std::popcount(c.words()[b[x]] ^ c.words()[b[y]]);
        if (d == n) ++far;
        else if (2 * d != n) return false;
      }
      (void)far;
    }
    // each block closed under complement
    Word all = low_mask(n);
    std::vector<Word> ws;
    for (std::size_t i : b) ws.push_back(c.words()[i]);
    std::sort(ws.begin(), ws.end());
    for (Word w : ws)
      if (!std::binary_search(ws.begin(), ws.end(), w ^ all)) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

namespace {

struct Decomposer {
  int n = 0;
  std::size_t m = 0;
  std::vector<Bits> adj;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> current;

  bool cover(Bits& remaining) {
    if (remaining.none()) return true;
    std::size_t p = remaining.first();
    Bits cand = adj[p] & remaining;
    current.assign(1, p);
    return extend(remaining, cand, n - 1);
  }

  bool extend(Bits& remaining, const Bits& cand, int need) {
    if (++nodes > budget) return false;
    if (need == 0) {
      blocks.push_back(current);
      Bits rest = remaining;
      for (std::size_t v : current) rest.reset(v);
      std::vector<std::size_t> keep = current;
      if (cover(rest)) return true;
      current = keep;
      blocks.pop_back();
      return false;
    }
    Bits pool = cand;
    for (std::size_t v = pool.first(); v < m; v = pool.next(v + 1)) {
      if (static_cast<int>(pool.count()) < need) return false;
      pool.reset(v);
      // pool now holds only later vertices, so each clique is built once
      Bits next = pool & adj[v];
      if (static_cast<int>(next.count()) < need - 1) continue;
      current.push_back(v);
      if (extend(remaining, next, need - 1)) return true;
      current.pop_back();
      if (nodes > budget) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<BlockPartition> find_block_decomposition(const BinaryCode& c, std::size_t nblocks,
                                                       std::uint64_t node_budget) {
  int n = c.length();
  if (n % 2 || nblocks == 0 || c.size() != 2 * nblocks * static_cast<std::size_t>(n)) return std::nullopt;
  Word all = low_mask(n);
  std::unordered_map<Word, std::size_t> index;
  for (std::size_t i = 0; i < c.size(); ++i) index[c.words()[i]] = i;
  std::vector<std::size_t> rep, mate;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Word w = c.words()[i];
    auto it = index.find(w ^ all);
    if (it == index.end()) return std::nullopt;
    if (lex_less(w, w ^ all)) {
      rep.push_back(i);
      mate.push_back(it->second);
    }
  }
  Decomposer d;
  d.n = n;
  d.m = rep.size();
  d.budget = node_budget;
  d.adj.assign(rep.size(), Bits(rep.size()));
  for (std::size_t p = 0; p < rep.size(); ++p)
    for (std::size_t q = p + 1; q < rep.size(); ++q)
      if (2 * std::popcount(c.words()[rep[p]] ^ c.words()[rep[q]]) == n) {
        d.adj[p].set(q);
        d.adj[q].set(p);
      }
  Bits remaining(rep.size());
  remaining.set_all();
  if (!d.cover(remaining)) {
    if (d.nodes > d.budget) throw BudgetExhausted("block decomposition search exceeded its node budget");
    return std::nullopt;
  }
  BlockPartition out;
  for (const auto& b : d.blocks) {
    std::vector<std::size_t> words;
    for (std::size_t p : b) {
      words.push_back(rep[p]);
      words.push_back(mate[p]);
    }
    std::sort(words.begin(), words.end());
    out.push_back(words);
  }
  return out;
}

}  // namespace hadamard
