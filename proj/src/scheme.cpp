#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hadamard/bitset.hpp"
#include "hadamard/bounds.hpp"

namespace hadamard {

SchemeReport verify_association_scheme(const BinaryCode& c) {
  SchemeReport r;
  std::size_t m = c.size();
  if (m > 1024) throw std::invalid_argument("scheme check limited to 1024 codewords");
  DistanceDistribution dd = distance_distribution(c);
  std::vector<int> supp = dd.support();
  if (supp.size() > 4) throw std::invalid_argument("code has more than four nonzero distances");
  r.distances.push_back(0);
  for (int d : supp) r.distances.push_back(d);
  int classes = static_cast<int>(r.distances.size());
  std::vector<int> cls(c.length() + 1, -1);
  for (int i = 0; i < classes; ++i) cls[r.distances[i]] = i;

  const auto& w = c.words();
  std::vector<std::vector<int>> rel(m, std::vector<int>(m));
  std::vector<std::vector<Bits>> nb(classes, std::vector<Bits>(m, Bits(m)));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      int k = cls[std::popcount(w[x] ^ w[y])];
      rel[x][y] = k;
      nb[k][x].set(y);
    }
  for (std::size_t x = 0; x < m; ++x) {
    if (rel[x][x] != 0) {
      r.failure = "A_0 is not the identity";
      return r;
    }
    for (std::size_t y = 0; y < m; ++y) {
      if (x != y && rel[x][y] == 0) {
        r.failure = "A_0 is not the identity";
        return r;
      }
      if (rel[x][y] != rel[y][x]) {
        r.failure = "relation not symmetric";
        return r;
      }
    }
  }
  // every pair lies in exactly one class, so sum A_i = J holds by construction
  r.p.assign(classes, std::vector<std::vector<long>>(classes, std::vector<long>(classes, -1)));
  for (int i = 0; i < classes; ++i)
    for (int j = 0; j < classes; ++j)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          long v = static_cast<long>(nb[i][x].and_count(nb[j][y]));
          long& slot = r.p[i][j][rel[x][y]];
          if (slot < 0) slot = v;
          else if (slot != v) {
            r.failure = "A_" + std::to_string(i) + " A_" + std::to_string(j) +
                        " is not a combination of the A_k (p^" + std::to_string(rel[x][y]) + " not constant)";
            return r;
          }
        }
  r.ok = true;
  return r;
}

}  // namespace hadamard
