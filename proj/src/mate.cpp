#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "hadamard/clique.hpp"
#include "hadamard/errors.hpp"

namespace hadamard {

std::vector<int> MateGraph::row(std::size_t v) const {
  std::vector<int> r(n);
  for (int j = 0; j < n; ++j) r[j] = ((vertices[v] >> j) & 1) ? -1 : 1;
  return r;
}

SignMatrix matrix_from_rows(int n, const std::vector<std::uint64_t>& rows) {
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("need n rows");
  return SignMatrix::generate(n, [&](int i, int j) { return ((rows[i] >> j) & 1) ? -1 : 1; });
}

namespace {

void check_mate_input(const SignMatrix& h) {
  int n = h.order();
  if (n < 4 || n > kMaxMateOrder) throw std::invalid_argument("mate search supports orders 4..32");
  if (!is_hadamard(h)) throw std::invalid_argument("mate search needs a Hadamard matrix");
}

std::vector<std::uint64_t> row_masks(const SignMatrix& h) {
  std::vector<std::uint64_t> m(h.order());
  for (int i = 0; i < h.order(); ++i) m[i] = h.sign_words(i)[0];
  return m;
}

std::vector<char> allowed_table(int n, const std::vector<int>& allowed_abs) {
  std::vector<char> ok(2 * n + 1, 0);
  for (int a : allowed_abs)
    if (a >= 0 && a <= n) ok[n + a] = ok[n - a] = 1;
  return ok;
}

std::uint64_t part_prefix(int part) {
  if (part < 0 || part > 3) throw std::invalid_argument("part index must be 0..3");
  return (static_cast<std::uint64_t>((part >> 1) & 1) << 1) | (static_cast<std::uint64_t>(part & 1) << 2);
}

int dot_mask(std::uint64_t x, std::uint64_t y, int n) {
  return n - 2 * std::popcount((x ^ y) & ((n == 64) ? ~0ULL : ((1ULL << n) - 1)));
}

}  // namespace

std::vector<std::uint64_t> mate_candidates_serial(const SignMatrix& h, const std::vector<int>& allowed_abs,
                                                  int part) {
  check_mate_input(h);
  int n = h.order();
  auto rows = row_masks(h);
  auto ok = allowed_table(n, allowed_abs);
  std::uint64_t prefix = part_prefix(part);
  std::vector<std::uint64_t> out;
  std::uint64_t total = 1ULL << (n - 3);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t x = prefix | (t << 3);
    bool good = true;
    for (int i = 0; i < n && good; ++i) good = ok[n + dot_mask(x, rows[i], n)];
    if (good) out.push_back(x);
  }
  return out;
}

std::vector<std::uint64_t> mate_candidates(const SignMatrix& h, const std::vector<int>& allowed_abs, int part) {
  check_mate_input(h);
  int n = h.order();
  auto rows = row_masks(h);
  auto ok = allowed_table(n, allowed_abs);
  std::uint64_t prefix = part_prefix(part);
  int r = n - 3;
  int chunk_bits = std::min(r, 14);
  std::int64_t chunks = std::int64_t{1} << (r - chunk_bits);
  // twice column c of H, column-major so a flip is one contiguous update
  std::vector<std::int16_t> col2(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i) col2[static_cast<std::size_t>(c) * n + i] = static_cast<std::int16_t>(2 * h.at(i, c));
  std::vector<std::vector<std::uint64_t>> found(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t ch = 0; ch < chunks; ++ch) {
    std::vector<std::int16_t> dots(n);
    std::uint64_t t0 = static_cast<std::uint64_t>(ch) << chunk_bits;
    std::uint64_t x = prefix | ((t0 ^ (t0 >> 1)) << 3);
    for (int i = 0; i < n; ++i) dots[i] = static_cast<std::int16_t>(dot_mask(x, rows[i], n));
    std::uint64_t count = 1ULL << chunk_bits;
    for (std::uint64_t s = 0; s < count; ++s) {
      if (s) {
        std::uint64_t t = t0 + s;
        int c = 3 + std::countr_zero(t);
        // x_c flips; dot_i changes by -2 h_ic x_c
        const std::int16_t* col = col2.data() + static_cast<std::size_t>(c) * n;
        if ((x >> c) & 1) {
          for (int i = 0; i < n; ++i) dots[i] = static_cast<std::int16_t>(dots[i] + col[i]);
        } else {
          for (int i = 0; i < n; ++i) dots[i] = static_cast<std::int16_t>(dots[i] - col[i]);
        }
        x ^= 1ULL << c;
      }
      bool good = true;
      for (int i = 0; i < n && good; ++i) good = ok[n + dots[i]];
      if (good) found[ch].push_back(x);
    }
  }
  std::vector<std::uint64_t> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

MateGraph build_mate_graph(const SignMatrix& h, const std::vector<int>& allowed_abs) {
  MateGraph g;
  g.n = h.order();
  for (int p = 0; p < 4; ++p) {
    g.part_begin[p] = g.vertices.size();
    auto c = mate_candidates(h, allowed_abs, p);
    g.vertices.insert(g.vertices.end(), c.begin(), c.end());
  }
  g.part_begin[4] = g.vertices.size();
  std::size_t m = g.vertices.size();
  g.adj.assign(m, Bits(m));
  int half = g.n / 2;
  std::uint64_t mask = (1ULL << g.n) - 1;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t u = 0; u < static_cast<std::int64_t>(m); ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (std::popcount((g.vertices[u] ^ g.vertices[v]) & mask) == half) g.adj[u].set(v);
  return g;
}

MateGraph build_mate_graph(const SignMatrix& h, std::array<int, 2> sigma) {
  return build_mate_graph(h, std::vector<int>{sigma[0], sigma[1]});
}

std::uint64_t enumerate_mates(const MateGraph& g, const std::function<bool(const std::vector<std::size_t>&)>& visit,
                              std::uint64_t budget) {
  int n = g.n;
  if (n % 4) return 0;
  int quota = n / 4;
  std::size_t m = g.size();
  std::array<Bits, 4> part_mask;
  for (int p = 0; p < 4; ++p) {
    part_mask[p] = Bits(m);
    for (std::size_t v = g.part_begin[p]; v < g.part_begin[p + 1]; ++v) part_mask[p].set(v);
  }
  std::uint64_t visited = 0, nodes = 0;
  bool halt = false;
  std::vector<std::size_t> chosen;
  std::function<void(const Bits&, int, int)> rec = [&](const Bits& cand, int part, int taken) {
    if (halt) return;
    if (++nodes > budget) {
      halt = true;
      return;
    }
    if (part == 4) {
      ++visited;
      if (!visit(chosen)) halt = true;
      return;
    }
    if (taken == quota) {
      rec(cand, part + 1, 0);
      return;
    }
    for (int q = part; q < 4; ++q) {
      std::size_t need = static_cast<std::size_t>(q == part ? quota - taken : quota);
      if (cand.and_count(part_mask[q]) < need) return;
    }
    Bits pool = cand & part_mask[part];
    Bits rest = cand;
    for (std::size_t v = pool.first(); v < m; v = pool.next(v + 1)) {
      chosen.push_back(v);
      rec(rest & g.adj[v], part, taken + 1);
      chosen.pop_back();
      if (halt) return;
      rest.reset(v);
    }
  };
  Bits all(m);
  all.set_all();
  rec(all, 0, 0);
  if (nodes > budget) throw BudgetExhausted("mate enumeration exceeded its node budget");
  return visited;
}

Prescreen prescreen(const MateGraph& g) {
  Prescreen r;
  for (int p = 0; p < 4; ++p) {
    std::size_t b = g.part_begin[p], e = g.part_begin[p + 1];
    AdjMatrix sub(e - b, Bits(e - b));
    for (std::size_t u = b; u < e; ++u)
      for (std::size_t v = g.adj[u].next(b); v < e; v = g.adj[u].next(v + 1)) sub[u - b].set(v - b);
    r.part_ok[p] = find_clique(sub, g.n / 4).has_value();
  }
  return r;
}

namespace {

SignMatrix to_matrix(const MateGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<std::uint64_t> rows;
  for (std::size_t v : idx) rows.push_back(g.vertices[v]);
  return matrix_from_rows(g.n, rows);
}

std::optional<SignMatrix> search(const SignMatrix& h, const std::vector<int>& allowed, MateStrategy strategy,
                                 const PairClassification* expected) {
  MateGraph g = build_mate_graph(h, allowed);
  std::optional<SignMatrix> found;
  auto accept = [&](const SignMatrix& k) {
    PairClassification c = classify_pair(h, k);
    if (!is_hadamard(k)) return false;
    if (expected && !c.matches(*expected)) return false;
    found = k;
    return true;
  };
  if (strategy == MateStrategy::Backtrack) {
    enumerate_mates(g, [&](const std::vector<std::size_t>& idx) { return !accept(to_matrix(g, idx)); });
  } else {
    auto w = find_clique(g.adj, g.n);
    if (w) {
      std::vector<std::size_t> idx(w->begin(), w->end());
      accept(to_matrix(g, idx));
    }
  }
  return found;
}

int qub_root(std::int64_t n, std::int64_t l, std::int64_t a) {
  if (l <= 0 || a <= 0 || l * a != n * n) throw std::invalid_argument("need l * a = n^2");
  int r = static_cast<int>(std::llround(std::sqrt(static_cast<double>(a))));
  if (static_cast<std::int64_t>(r) * r != a || r % 2) throw std::invalid_argument("a must be an even square");
  int alpha = r / 2;
  if (n % (2 * alpha) || n > 4L * alpha * alpha) throw std::invalid_argument("infeasible (l, a)");
  return r;
}

}  // namespace

std::optional<SignMatrix> find_mate(const SignMatrix& h, std::array<int, 2> sigma, MateStrategy strategy) {
  check_mate_input(h);
  std::array<int, 2> s = sigma;
  if (s[0] > s[1]) std::swap(s[0], s[1]);
  PairClassification want = (s[0] % 4 == 0) ? PairClassification::type2(s[0], s[1])
                                             : PairClassification::weakly_unbiased(s[0], s[1]);
  return search(h, {s[0], s[1]}, strategy, &want);
}

std::optional<SignMatrix> find_qub_mate(const SignMatrix& h, std::int64_t l, std::int64_t a) {
  check_mate_input(h);
  int r = qub_root(h.order(), l, a);
  PairClassification want = PairClassification::quasi_unbiased(l, a);
  return search(h, {0, r}, MateStrategy::Backtrack, &want);
}

std::vector<SignMatrix> enumerate_qub_mates(const SignMatrix& h, std::int64_t l, std::int64_t a) {
  check_mate_input(h);
  int r = qub_root(h.order(), l, a);
  MateGraph g = build_mate_graph(h, std::vector<int>{0, r});
  std::vector<SignMatrix> out;
  enumerate_mates(g, [&](const std::vector<std::size_t>& idx) {
    out.push_back(to_matrix(g, idx));
    return true;
  });
  return out;
}

bool any_mutual_pair(const std::vector<SignMatrix>& mates, std::int64_t l, std::int64_t a) {
  if (mates.empty()) return false;
  int n = mates[0].order();
  int r = qub_root(n, l, a);
  std::vector<std::vector<std::uint64_t>> rows(mates.size());
  for (std::size_t i = 0; i < mates.size(); ++i) rows[i] = row_masks(mates[i]);
  std::atomic<bool> hit{false};
  std::int64_t m = static_cast<std::int64_t>(mates.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < m; ++i) {
    if (hit.load(std::memory_order_relaxed)) continue;
    for (std::int64_t j = i + 1; j < m; ++j) {
      bool good = true;
      for (int x = 0; x < n && good; ++x)
        for (int y = 0; y < n && good; ++y) {
          int d = std::abs(dot_mask(rows[i][x], rows[j][y], n));
          good = d == 0 || d == r;
        }
      if (good) {
        hit = true;
        break;
      }
    }
  }
  return hit.load();
}

}  // namespace hadamard
