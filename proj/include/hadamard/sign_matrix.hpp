#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hadamard {

inline constexpr int kMaxOrder = 256;

// Square matrix over {-1, 0, +1}, stored as two bit planes per row.
class SignMatrix {
 public:
  SignMatrix() = default;

  // entries(i, j) must return -1, 0 or +1
  static SignMatrix generate(int n, const std::function<int(int, int)>& entries);
  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static SignMatrix identity(int n);

  int order() const { return n_; }
  int at(int i, int j) const;
  std::vector<int> row(int i) const;

  // <row i of this, row j of other>
  int row_dot(int i, const SignMatrix& other, int j) const;
  int row_weight(int i) const;

  SignMatrix transpose() const;
  SignMatrix negate_row(int i) const;
  SignMatrix negate_col(int j) const;
  SignMatrix permute_rows(const std::vector<int>& perm) const;
  SignMatrix permute_cols(const std::vector<int>& perm) const;

  // packed planes for row i: bit j set when entry j is negative / nonzero
  const std::uint64_t* sign_words(int i) const { return sign_.data() + static_cast<std::size_t>(i) * wpr_; }
  const std::uint64_t* support_words(int i) const { return support_.data() + static_cast<std::size_t>(i) * wpr_; }
  int words_per_row() const { return wpr_; }

  bool operator==(const SignMatrix& o) const;

 private:
  explicit SignMatrix(int n);
  void put(int i, int j, int v);

  int n_ = 0;
  int wpr_ = 0;
  std::vector<std::uint64_t> sign_;
  std::vector<std::uint64_t> support_;
};

// A * B^T as a dense row-major vector
std::vector<long> gram(const SignMatrix& a, const SignMatrix& b);

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);

// Text format: n lines of n characters from {+, -, 0}.
SignMatrix parse_matrix(std::string_view text);
SignMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const SignMatrix& m);
void write_matrix_file(const std::string& path, const SignMatrix& m);

}  // namespace hadamard
