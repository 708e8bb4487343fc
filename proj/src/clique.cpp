#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>

#include "hadamard/clique.hpp"

namespace hadamard {

AdjMatrix adjacency_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  AdjMatrix adj(n, Bits(n));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[u].set(v);
    adj[v].set(u);
  }
  return adj;
}

namespace {

class Solver {
 public:
  Solver(const AdjMatrix& adj, std::uint64_t budget, int floor) : budget_(budget), best_(floor) {
    std::size_t n = adj.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    std::vector<int> inv(n);
    for (std::size_t k = 0; k < n; ++k) inv[order_[k]] = static_cast<int>(k);
    adj_.assign(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = adj[v].first(); u < n; u = adj[v].next(u + 1)) adj_[inv[v]].set(inv[u]);
  }

  // stop once a clique of this size is known
  void set_target(int k) { target_ = k; }

  CliqueResult run(bool parallel) {
    std::size_t n = adj_.size();
    if (n > 0 && best_ < 1) {
      best_ = 1;
      witness_ = {0};
    }
    Bits p(n);
    p.set_all();
    std::vector<int> verts, colors;
    color_sort(p, verts, colors);
    int k = static_cast<int>(verts.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (int t = 0; t < k; ++t) branch(p, verts, colors, k - 1 - t);
    } else {
      for (int t = 0; t < k; ++t) branch(p, verts, colors, k - 1 - t);
    }
    CliqueResult r;
    r.size = best_.load();
    for (int v : witness_) r.witness.push_back(order_[v]);
    std::sort(r.witness.begin(), r.witness.end());
    r.exhausted = nodes_.load() > budget_;
    r.nodes = nodes_.load();
    if (static_cast<int>(r.witness.size()) != r.size) r.witness.clear();
    return r;
  }

 private:
  bool stop() const { return nodes_.load(std::memory_order_relaxed) > budget_ || (target_ > 0 && best_.load() >= target_); }

  void branch(const Bits& root, const std::vector<int>& verts, const std::vector<int>& colors, int i) {
    if (stop() || colors[i] <= best_.load()) return;
    Bits p = root;
    for (std::size_t j = i + 1; j < verts.size(); ++j) p.reset(verts[j]);
    std::vector<int> cur{verts[i]};
    Bits next = p & adj_[verts[i]];
    expand(cur, next);
  }

  void color_sort(const Bits& p, std::vector<int>& verts, std::vector<int>& colors) const {
    verts.clear();
    colors.clear();
    Bits u = p;
    int color = 0;
    std::size_t n = adj_.size();
    while (u.any()) {
      ++color;
      Bits q = u;
      for (std::size_t v = q.first(); v < n; v = q.next(v + 1)) {
        q.and_not(adj_[v]);
        u.reset(v);
        verts.push_back(static_cast<int>(v));
        colors.push_back(color);
      }
    }
  }

  void record(const std::vector<int>& cur) {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(cur.size()) > best_.load()) {
      best_.store(static_cast<int>(cur.size()));
      witness_ = cur;
    }
  }

  void expand(std::vector<int>& cur, Bits p) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    if (p.none()) {
      if (static_cast<int>(cur.size()) > best_.load()) record(cur);
      return;
    }
    std::vector<int> verts, colors;
    color_sort(p, verts, colors);
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (stop()) return;
      if (static_cast<int>(cur.size()) + colors[i] <= best_.load()) return;
      int v = verts[i];
      cur.push_back(v);
      expand(cur, p & adj_[v]);
      cur.pop_back();
      p.reset(v);
    }
  }

  AdjMatrix adj_;
  std::vector<int> order_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<int> best_;
  int target_ = 0;
  std::mutex mu_;
  std::vector<int> witness_;
};

}  // namespace

CliqueResult max_clique(const AdjMatrix& adj, std::uint64_t budget) { return Solver(adj, budget, 0).run(true); }

CliqueResult max_clique_serial(const AdjMatrix& adj, std::uint64_t budget) {
  return Solver(adj, budget, 0).run(false);
}

std::optional<std::vector<int>> find_clique(const AdjMatrix& adj, int k, std::uint64_t budget) {
  if (k <= 0) return std::vector<int>{};
  Solver s(adj, budget, k - 1);
  s.set_target(k);
  CliqueResult r = s.run(false);
  if (r.size >= k && !r.witness.empty()) {
    r.witness.resize(k);
    return r.witness;
  }
  return std::nullopt;
}

}  // namespace hadamard
