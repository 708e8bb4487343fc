#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hadamard {

// Vertex-colored digraph; an undirected edge is a pair of opposite arcs.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(int n, std::vector<int> colors, std::vector<std::pair<int, int>> arcs);

  int vertex_count() const { return n_; }
  int color(int v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }
  std::size_t arc_count() const { return out_adj_.size(); }

  const int* out_begin(int v) const { return out_adj_.data() + out_off_[v]; }
  const int* out_end(int v) const { return out_adj_.data() + out_off_[v + 1]; }
  const int* in_begin(int v) const { return in_adj_.data() + in_off_[v]; }
  const int* in_end(int v) const { return in_adj_.data() + in_off_[v + 1]; }
  int out_degree(int v) const { return out_off_[v + 1] - out_off_[v]; }
  int in_degree(int v) const { return in_off_[v + 1] - in_off_[v]; }
  bool has_arc(int u, int v) const;

  std::vector<std::pair<int, int>> arcs() const;
  ColoredGraph relabel(const std::vector<int>& perm) const;  // vertex v becomes perm[v]
  std::string dump() const;                                  // DIMACS-like text

 private:
  int n_ = 0;
  std::vector<int> colors_;
  std::vector<int> out_off_, out_adj_, in_off_, in_adj_;
};

}  // namespace hadamard
