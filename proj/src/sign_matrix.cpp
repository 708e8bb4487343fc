#include "hadamard/sign_matrix.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hadamard {

SignMatrix::SignMatrix(int n) : n_(n), wpr_((n + 63) / 64) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("matrix order out of range: " + std::to_string(n));
  sign_.assign(static_cast<std::size_t>(n) * wpr_, 0);
  support_.assign(static_cast<std::size_t>(n) * wpr_, 0);
}

void SignMatrix::put(int i, int j, int v) {
  std::size_t w = static_cast<std::size_t>(i) * wpr_ + j / 64;
  std::uint64_t bit = std::uint64_t{1} << (j % 64);
  sign_[w] &= ~bit;
  support_[w] &= ~bit;
  if (v == 0) return;
  support_[w] |= bit;
  if (v < 0) sign_[w] |= bit;
}

SignMatrix SignMatrix::generate(int n, const std::function<int(int, int)>& entries) {
  SignMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = entries(i, j);
      if (v < -1 || v > 1) throw std::invalid_argument("entry outside {-1,0,1}");
      m.put(i, j, v);
    }
  return m;
}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("matrix is not square");
  return generate(n, [&](int i, int j) { return rows[i][j]; });
}

SignMatrix SignMatrix::identity(int n) {
  return generate(n, [](int i, int j) { return i == j ? 1 : 0; });
}

int SignMatrix::at(int i, int j) const {
  std::size_t w = static_cast<std::size_t>(i) * wpr_ + j / 64;
  std::uint64_t bit = std::uint64_t{1} << (j % 64);
  if (!(support_[w] & bit)) return 0;
  return (sign_[w] & bit) ? -1 : 1;
}

std::vector<int> SignMatrix::row(int i) const {
  std::vector<int> r(n_);
  for (int j = 0; j < n_; ++j) r[j] = at(i, j);
  return r;
}

int SignMatrix::row_dot(int i, const SignMatrix& other, int j) const {
  if (other.n_ != n_) throw std::invalid_argument("order mismatch");
  const std::uint64_t* sa = sign_words(i);
  const std::uint64_t* ta = support_words(i);
  const std::uint64_t* sb = other.sign_words(j);
  const std::uint64_t* tb = other.support_words(j);
  int total = 0;
  for (int w = 0; w < wpr_; ++w) {
    std::uint64_t s = ta[w] & tb[w];
    total += std::popcount(s) - 2 * std::popcount((sa[w] ^ sb[w]) & s);
  }
  return total;
}

int SignMatrix::row_weight(int i) const {
  int total = 0;
  for (int w = 0; w < wpr_; ++w) total += std::popcount(support_words(i)[w]);
  return total;
}

SignMatrix SignMatrix::transpose() const {
  return generate(n_, [&](int i, int j) { return at(j, i); });
}

SignMatrix SignMatrix::negate_row(int r) const {
  return generate(n_, [&](int i, int j) { return i == r ? -at(i, j) : at(i, j); });
}

SignMatrix SignMatrix::negate_col(int c) const {
  return generate(n_, [&](int i, int j) { return j == c ? -at(i, j) : at(i, j); });
}

SignMatrix SignMatrix::permute_rows(const std::vector<int>& perm) const {
  return generate(n_, [&](int i, int j) { return at(perm.at(i), j); });
}

SignMatrix SignMatrix::permute_cols(const std::vector<int>& perm) const {
  return generate(n_, [&](int i, int j) { return at(i, perm.at(j)); });
}

bool SignMatrix::operator==(const SignMatrix& o) const {
  return n_ == o.n_ && sign_ == o.sign_ && support_ == o.support_;
}

std::vector<long> gram(const SignMatrix& a, const SignMatrix& b) {
  int n = a.order();
  if (b.order() != n) throw std::invalid_argument("order mismatch");
  std::vector<long> g(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(i) * n + j] = a.row_dot(i, b, j);
  return g;
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  int p = a.order(), q = b.order();
  return SignMatrix::generate(p * q, [&](int i, int j) { return a.at(i / q, j / q) * b.at(i % q, j % q); });
}

SignMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    std::vector<int> r;
    for (char c : line) {
      if (c == '+') r.push_back(1);
      else if (c == '-') r.push_back(-1);
      else if (c == '0') r.push_back(0);
      else throw std::invalid_argument("line " + std::to_string(lineno) + ": unexpected character '" + c + "'");
    }
    if (!rows.empty() && r.size() != rows.front().size())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": ragged row");
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  if (rows.size() != rows.front().size()) throw std::invalid_argument("matrix is not square");
  return SignMatrix::from_rows(rows);
}

SignMatrix read_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_matrix(ss.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string format_matrix(const SignMatrix& m) {
  std::string out;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      int v = m.at(i, j);
      out += v > 0 ? '+' : (v < 0 ? '-' : '0');
    }
    out += '\n';
  }
  return out;
}

void write_matrix_file(const std::string& path, const SignMatrix& m) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << format_matrix(m);
}

}  // namespace hadamard
