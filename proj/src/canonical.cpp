#include "hadamard/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

// Ordered partition; a cell is identified by its start position.
struct Partition {
  std::vector<int> elems, pos, cell, end;
  int cells = 0;

  explicit Partition(const ColoredGraph& g) {
    int n = g.vertex_count();
    elems.resize(n);
    std::iota(elems.begin(), elems.end(), 0);
    std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) { return g.color(a) < g.color(b); });
    pos.resize(n);
    cell.resize(n);
    end.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[elems[i]] = i;
    int start = 0;
    for (int i = 0; i <= n; ++i) {
      if (i == n || (i > 0 && g.color(elems[i]) != g.color(elems[i - 1]))) {
        for (int k = start; k < i; ++k) cell[elems[k]] = start;
        if (i > start) {
          end[start] = i;
          ++cells;
        }
        start = i;
      }
    }
  }

  bool discrete() const { return cells == static_cast<int>(elems.size()); }
};

class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g) : g_(g), cnt_(g.vertex_count(), 0), inq_(g.vertex_count() + 1, 0) {}

  // Refines to the coarsest equitable partition finer than p, with the given
  // initial splitters. Returns a hash of the splitting trace.
  std::uint64_t refine(Partition& p, std::vector<int> splitters) {
    std::uint64_t trace = 0x51ed27ULL;
    queue_.clear();
    head_ = 0;
    for (int s : splitters) push(s);
    while (head_ < queue_.size() && !p.discrete()) {
      int w = queue_[head_++];
      inq_[w] = 0;
      int wb = w, we = p.end[w];
      for (int dir = 0; dir < 2; ++dir) {
        touched_.clear();
        for (int i = wb; i < we; ++i) {
          int x = p.elems[i];
          const int* b = dir ? g_.in_begin(x) : g_.out_begin(x);
          const int* e = dir ? g_.in_end(x) : g_.out_end(x);
          for (const int* q = b; q != e; ++q) {
            if (cnt_[*q]++ == 0) touched_.push_back(*q);
          }
        }
        touched_cells_.clear();
        for (int v : touched_) touched_cells_.push_back(p.cell[v]);
        std::sort(touched_cells_.begin(), touched_cells_.end());
        touched_cells_.erase(std::unique(touched_cells_.begin(), touched_cells_.end()), touched_cells_.end());
        for (int c : touched_cells_) trace = split(p, c, trace, dir);
        for (int v : touched_) cnt_[v] = 0;
        trace = mix(trace, 0xABCDEFULL + p.cells);
      }
    }
    for (std::size_t i = head_; i < queue_.size(); ++i) inq_[queue_[i]] = 0;
    return trace;
  }

 private:
  void push(int s) {
    if (!inq_[s]) {
      inq_[s] = 1;
      queue_.push_back(s);
    }
  }

  std::uint64_t split(Partition& p, int c, std::uint64_t trace, int dir) {
    int b = c, e = p.end[c];
    if (e - b == 1) return trace;
    int first = cnt_[p.elems[b]];
    bool uniform = true;
    for (int i = b + 1; i < e && uniform; ++i) uniform = cnt_[p.elems[i]] == first;
    if (uniform) return trace;
    std::sort(p.elems.begin() + b, p.elems.begin() + e, [&](int x, int y) {
      return cnt_[x] < cnt_[y] || (cnt_[x] == cnt_[y] && x < y);
    });
    bool was_queued = inq_[c];
    // fragments
    frag_.clear();
    int s = b;
    for (int i = b + 1; i <= e; ++i) {
      if (i == e || cnt_[p.elems[i]] != cnt_[p.elems[i - 1]]) {
        frag_.push_back({s, i});
        s = i;
      }
    }
    trace = mix(trace, static_cast<std::uint64_t>(c) * 2 + dir);
    int largest = 0;
    for (std::size_t f = 0; f < frag_.size(); ++f) {
      auto [fb, fe] = frag_[f];
      for (int i = fb; i < fe; ++i) {
        p.pos[p.elems[i]] = i;
        p.cell[p.elems[i]] = fb;
      }
      p.end[fb] = fe;
      trace = mix(trace, (static_cast<std::uint64_t>(cnt_[p.elems[fb]]) << 32) | static_cast<std::uint64_t>(fe - fb));
      if (fe - fb > frag_[largest].second - frag_[largest].first) largest = static_cast<int>(f);
    }
    p.cells += static_cast<int>(frag_.size()) - 1;
    for (std::size_t f = 0; f < frag_.size(); ++f) {
      if (was_queued || static_cast<int>(f) != largest) push(frag_[f].first);
    }
    return trace;
  }

  const ColoredGraph& g_;
  std::vector<int> cnt_;
  std::vector<char> inq_;
  std::vector<int> queue_;
  std::size_t head_ = 0;
  std::vector<int> touched_, touched_cells_;
  std::vector<std::pair<int, int>> frag_;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n = 0) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Leaf {
  std::vector<int> elems;
  std::vector<std::uint64_t> trace;
  std::vector<std::uint64_t> cert;
  std::vector<int> path;
};

int compare_seq(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

class Search {
 public:
  explicit Search(const ColoredGraph& g) : g_(g), refiner_(g) {}

  CanonicalResult run() {
    int n = g_.vertex_count();
    CanonicalResult r;
    Partition p(g_);
    std::vector<int> starts;
    for (int i = 0; i < n; i = p.end[i]) starts.push_back(i);
    trace_.push_back(refiner_.refine(p, starts));
    explore(0, p, true);
    r.labeling.assign(n, 0);
    for (int i = 0; i < n; ++i) r.labeling[best_.elems[i]] = i;
    r.form = encode(best_);
    r.generators = std::move(generators_);
    r.nodes = nodes_;
    r.leaves = leaves_;
    return r;
  }

 private:
  std::vector<std::uint64_t> certificate(const Partition& p) const {
    std::vector<std::uint64_t> cert;
    cert.reserve(g_.arc_count());
    for (int u = 0; u < g_.vertex_count(); ++u)
      for (const int* q = g_.out_begin(u); q != g_.out_end(u); ++q)
        cert.push_back((static_cast<std::uint64_t>(p.pos[u]) << 32) | static_cast<std::uint64_t>(p.pos[*q]));
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  std::string encode(const Leaf& leaf) const {
    int n = g_.vertex_count();
    std::string s;
    auto put = [&](std::uint32_t x) {
      for (int k = 0; k < 4; ++k) s.push_back(static_cast<char>((x >> (8 * k)) & 0xff));
    };
    put(static_cast<std::uint32_t>(n));
    for (int i = 0; i < n; ++i) put(static_cast<std::uint32_t>(g_.color(leaf.elems[i])));
    put(static_cast<std::uint32_t>(leaf.cert.size()));
    for (auto a : leaf.cert) {
      put(static_cast<std::uint32_t>(a >> 32));
      put(static_cast<std::uint32_t>(a & 0xffffffffu));
    }
    return s;
  }

  static int target_cell(const Partition& p) {
    int n = static_cast<int>(p.elems.size());
    for (int i = 0; i < n; i = p.end[i])
      if (p.end[i] - i > 1) return i;
    return -1;
  }

  static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  void add_generator(const Partition& p, const Leaf& target) {
    int n = g_.vertex_count();
    std::vector<int> gamma(n);
    for (int v = 0; v < n; ++v) gamma[v] = target.elems[p.pos[v]];
    generators_.push_back(std::move(gamma));
  }

  // returns the depth whose child loop should continue
  int leaf(int depth, const Partition& p) {
    ++leaves_;
    std::vector<std::uint64_t> cert = certificate(p);
    if (!have_first_) {
      have_first_ = true;
      first_ = Leaf{p.elems, trace_, std::move(cert), path_};
      best_ = first_;
      return depth;
    }
    int ct = compare_seq(trace_, first_.trace);
    if (ct == 0 && cert == first_.cert) {
      std::size_t d = common_prefix(path_, first_.path);
      add_generator(p, first_);
      return static_cast<int>(d);
    }
    int cb = compare_seq(trace_, best_.trace);
    if (cb == 0) cb = cert == best_.cert ? 0 : (cert < best_.cert ? -1 : 1);
    if (cb == 0) {
      std::size_t d = common_prefix(path_, best_.path);
      add_generator(p, best_);
      return static_cast<int>(d);
    }
    if (cb > 0) best_ = Leaf{p.elems, trace_, std::move(cert), path_};
    return depth;
  }

  int explore(int depth, const Partition& p, bool first_path) {
    ++nodes_;
    if (p.discrete()) return leaf(depth, p);
    int c = target_cell(p);
    std::vector<int> children(p.elems.begin() + c, p.elems.begin() + p.end[c]);
    std::sort(children.begin(), children.end());
    std::vector<int> done;
    // orbits of the stored automorphisms fixing the current path pointwise
    UnionFind orbits;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    for (std::size_t k = 0; k < children.size(); ++k) {
      int v = children[k];
      bool on_first = first_path && (!have_first_ || (static_cast<std::size_t>(depth) < first_.path.size() &&
                                                     first_.path[depth] == v));
      if (!done.empty()) {
        if (gens_seen != generators_.size()) {
          orbits = UnionFind(g_.vertex_count());
          for (const auto& gamma : generators_) {
            bool fixes = true;
            for (int u : path_)
              if (gamma[u] != u) {
                fixes = false;
                break;
              }
            if (!fixes) continue;
            for (int i = c; i < p.end[c]; ++i) orbits.unite(p.elems[i], gamma[p.elems[i]]);
          }
          gens_seen = generators_.size();
        }
        int rv = orbits.find(v);
        bool seen = false;
        for (int u : done)
          if (orbits.find(u) == rv) {
            seen = true;
            break;
          }
        if (seen) continue;
      }
      Partition q = p;
      individualize(q, c, v);
      trace_.push_back(refiner_.refine(q, {q.pos[v]}));
      path_.push_back(v);
      bool prune = false;
      if (have_first_) {
        std::vector<std::uint64_t> prefix(best_.trace.begin(),
                                          best_.trace.begin() + std::min(best_.trace.size(), trace_.size()));
        std::vector<std::uint64_t> mine(trace_.begin(), trace_.begin() + prefix.size());
        prune = compare_seq(mine, prefix) < 0;
      }
      int r = prune ? depth : explore(depth + 1, q, on_first);
      trace_.pop_back();
      path_.pop_back();
      done.push_back(v);
      if (r < depth) return r;
    }
    return depth;
  }

  static void individualize(Partition& p, int c, int v) {
    int b = c, e = p.end[c];
    int i = p.pos[v];
    std::swap(p.elems[i], p.elems[b]);
    p.pos[p.elems[i]] = i;
    p.pos[v] = b;
    p.end[b] = b + 1;
    p.end[b + 1] = e;
    for (int k = b + 1; k < e; ++k) p.cell[p.elems[k]] = b + 1;
    p.cell[v] = b;
    p.cells++;
  }

  const ColoredGraph& g_;
  Refiner refiner_;
  std::vector<std::uint64_t> trace_;
  std::vector<int> path_;
  bool have_first_ = false;
  Leaf first_, best_;
  std::vector<std::vector<int>> generators_;
  std::uint64_t nodes_ = 0, leaves_ = 0;
};

}  // namespace

CanonicalResult canonical_labeling(const ColoredGraph& g) { return Search(g).run(); }

std::string canonical_form(const ColoredGraph& g) { return canonical_labeling(g).form; }

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

ColoredGraph incidence_graph(const BinaryCode& c) {
  int n = c.length();
  int m = static_cast<int>(c.size());
  std::vector<int> colors(m + n, 1);
  for (int i = 0; i < m; ++i) colors[i] = 0;
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if ((c.words()[i] >> j) & 1) {
        arcs.emplace_back(i, m + j);
        arcs.emplace_back(m + j, i);
      }
  return ColoredGraph(m + n, std::move(colors), std::move(arcs));
}

std::string code_canonical_form(const BinaryCode& c) {
  std::string best;
  bool have = false;
  for (Word x : c.words()) {
    std::vector<Word> t;
    for (Word w : c.words()) t.push_back(w ^ x);
    std::string f = canonical_form(incidence_graph(BinaryCode(c.length(), std::move(t))));
    if (!have || f < best) {
      best = std::move(f);
      have = true;
    }
  }
  return best;
}

ColoredGraph translation_graph(const BinaryCode& c) {
  int n = c.length();
  int m = static_cast<int>(c.size());
  // coordinate vertices first so they are individualized first
  std::vector<int> colors(2 * n + m, 1);
  for (int i = 0; i < 2 * n; ++i) colors[i] = 0;
  std::vector<std::pair<int, int>> arcs;
  for (int j = 0; j < n; ++j) {
    arcs.emplace_back(2 * j, 2 * j + 1);
    arcs.emplace_back(2 * j + 1, 2 * j);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int coord = 2 * j + static_cast<int>((c.words()[i] >> j) & 1);
      arcs.emplace_back(2 * n + i, coord);
      arcs.emplace_back(coord, 2 * n + i);
    }
  return ColoredGraph(2 * n + m, std::move(colors), std::move(arcs));
}

std::string code_certificate(const BinaryCode& c) { return canonical_form(translation_graph(c)); }

bool codes_equivalent(const BinaryCode& a, const BinaryCode& b) {
  if (a.length() != b.length() || a.size() != b.size()) return false;
  return code_certificate(a) == code_certificate(b);
}

}  // namespace hadamard
