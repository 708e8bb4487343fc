#include "hadamard/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hadamard {

namespace {

void build_csr(int n, const std::vector<std::pair<int, int>>& arcs, bool reverse, std::vector<int>& off,
               std::vector<int>& adj) {
  off.assign(n + 1, 0);
  for (auto [u, v] : arcs) off[(reverse ? v : u) + 1]++;
  for (int i = 0; i < n; ++i) off[i + 1] += off[i];
  adj.assign(arcs.size(), 0);
  std::vector<int> fill(off.begin(), off.end() - 1);
  for (auto [u, v] : arcs) {
    if (reverse) adj[fill[v]++] = u;
    else adj[fill[u]++] = v;
  }
  for (int i = 0; i < n; ++i) std::sort(adj.begin() + off[i], adj.begin() + off[i + 1]);
}

}  // namespace

ColoredGraph::ColoredGraph(int n, std::vector<int> colors, std::vector<std::pair<int, int>> arcs)
    : n_(n), colors_(std::move(colors)) {
  if (n < 0 || static_cast<int>(colors_.size()) != n) throw std::invalid_argument("ColoredGraph: color vector size mismatch");
  for (auto [u, v] : arcs)
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("ColoredGraph: arc references a missing vertex");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  build_csr(n, arcs, false, out_off_, out_adj_);
  build_csr(n, arcs, true, in_off_, in_adj_);
}

bool ColoredGraph::has_arc(int u, int v) const { return std::binary_search(out_begin(u), out_end(u), v); }

std::vector<std::pair<int, int>> ColoredGraph::arcs() const {
  std::vector<std::pair<int, int>> a;
  a.reserve(out_adj_.size());
  for (int u = 0; u < n_; ++u)
    for (const int* p = out_begin(u); p != out_end(u); ++p) a.emplace_back(u, *p);
  return a;
}

ColoredGraph ColoredGraph::relabel(const std::vector<int>& perm) const {
  std::vector<int> c(n_);
  for (int v = 0; v < n_; ++v) c[perm[v]] = colors_[v];
  std::vector<std::pair<int, int>> a;
  for (auto [u, v] : arcs()) a.emplace_back(perm[u], perm[v]);
  return ColoredGraph(n_, std::move(c), std::move(a));
}

std::string ColoredGraph::dump() const {
  std::ostringstream os;
  os << "p digraph " << n_ << " " << arc_count() << "\n";
  for (int v = 0; v < n_; ++v) os << "c " << v << " " << colors_[v] << "\n";
  for (auto [u, v] : arcs()) os << "a " << u << " " << v << "\n";
  return os.str();
}

}  // namespace hadamard
