#include "hadamard/binary_code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "hadamard/core.hpp"

namespace hadamard {

bool lex_less(Word x, Word y) {
  Word d = x ^ y;
  if (!d) return false;
  return !((x >> std::countr_zero(d)) & 1);
}

BinaryCode::BinaryCode(int n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
  if (n < 1 || n > 64) throw std::invalid_argument("binary code length must be in 1..64");
  Word mask = low_mask(n);
  for (Word w : words_)
    if (w & ~mask) throw std::invalid_argument("word longer than code length");
  sorted_ = words_;
  std::sort(sorted_.begin(), sorted_.end());
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end())
    throw std::invalid_argument("duplicate codeword");
}

bool BinaryCode::contains(Word w) const { return std::binary_search(sorted_.begin(), sorted_.end(), w); }

std::vector<int> DistanceDistribution::support() const {
  std::vector<int> s;
  for (int i = 1; i < static_cast<int>(counts.size()); ++i)
    if (counts[i] != 0) s.push_back(i);
  return s;
}

std::string DistanceDistribution::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? ", " : "") << counts[i];
  os << ")";
  return os.str();
}

std::vector<std::uint64_t> distance_pair_counts_serial(const std::vector<Word>& words, int n) {
  std::vector<std::uint64_t> h(n + 1, 0);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) h[std::popcount(words[i] ^ words[j])]++;
  return h;
}

std::vector<std::uint64_t> distance_pair_counts(const std::vector<Word>& words, int n) {
  std::vector<std::uint64_t> h(n + 1, 0);
  const std::int64_t m = static_cast<std::int64_t>(words.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = i + 1; j < m; ++j) local[std::popcount(words[i] ^ words[j])]++;
#pragma omp critical
    for (int d = 0; d <= n; ++d) h[d] += local[d];
  }
  return h;
}

DistanceDistribution distribution_from_counts(int n, const std::vector<std::int64_t>& counts) {
  DistanceDistribution d;
  d.n = n;
  for (auto c : counts) d.counts.emplace_back(c);
  d.counts.resize(n + 1);
  return d;
}

DistanceDistribution distance_distribution(const BinaryCode& c) {
  if (c.size() == 0) throw std::invalid_argument("distance_distribution: empty code");
  int n = c.length();
  auto h = distance_pair_counts(c.words(), n);
  DistanceDistribution d;
  d.n = n;
  d.counts.resize(n + 1);
  BigInt m = static_cast<std::uint64_t>(c.size());
  d.counts[0] = Rational(m, m);
  for (int i = 1; i <= n; ++i) d.counts[i] = Rational(BigInt(2 * h[i]), m);
  return d;
}

bool is_self_complementary(const BinaryCode& c) {
  Word all = low_mask(c.length());
  for (Word w : c.words())
    if (!c.contains(w ^ all)) return false;
  return true;
}

int min_distance(const BinaryCode& c) {
  if (c.size() < 2) throw std::invalid_argument("min_distance: need at least two codewords");
  int best = c.length() + 1;
  const auto& w = c.words();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, std::popcount(w[i] ^ w[j]));
  return best;
}

BinaryCode code_of_hadamard(const SignMatrix& h) {
  if (!is_hadamard(h)) throw std::invalid_argument("code_of_hadamard: not a Hadamard matrix");
  int n = h.order();
  if (n > 64) throw std::invalid_argument("code_of_hadamard: order above 64");
  for (int i = 0; i < n; ++i)
    if (h.at(0, i) != 1 || h.at(i, 0) != 1) throw std::invalid_argument("code_of_hadamard: matrix is not normalized");
  return matrices_to_code({h});
}

BinaryCode matrices_to_code(const std::vector<SignMatrix>& ms) {
  if (ms.empty()) throw std::invalid_argument("matrices_to_code: empty list");
  int n = ms[0].order();
  std::vector<Word> words;
  for (const auto& m : ms) {
    if (m.order() != n) throw std::invalid_argument("matrices_to_code: order mismatch");
    Word all = low_mask(n);
    std::vector<Word> neg;
    for (int i = 0; i < n; ++i) {
      Word w = 0;
      for (int j = 0; j < n; ++j)
        if (m.at(i, j) == 1) w |= Word{1} << j;
      words.push_back(w);
      neg.push_back(w ^ all);
    }
    words.insert(words.end(), neg.begin(), neg.end());
  }
  return BinaryCode(n, std::move(words));
}

Word word_from_string(std::string_view bits) {
  if (bits.size() > 64) throw std::invalid_argument("word longer than 64");
  Word w = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') w |= Word{1} << i;
    else if (bits[i] != '0') throw std::invalid_argument("bad bit character");
  }
  return w;
}

std::string word_to_string(Word w, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((w >> i) & 1) s[i] = '1';
  return s;
}

Word word_from_support(const std::vector<int>& support) {
  Word w = 0;
  for (int i : support) {
    if (i < 1 || i > 64) throw std::invalid_argument("support index out of range");
    w |= Word{1} << (i - 1);
  }
  return w;
}

std::vector<int> support_of(Word w, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if ((w >> i) & 1) s.push_back(i + 1);
  return s;
}

BinaryCode span(int n, const std::vector<Word>& generators) {
  std::vector<Word> words{0};
  for (Word g : generators) {
    std::set<Word> have(words.begin(), words.end());
    if (have.count(g)) continue;
    std::size_t sz = words.size();
    for (std::size_t i = 0; i < sz; ++i) words.push_back(words[i] ^ g);
  }
  return BinaryCode(n, std::move(words));
}

BinaryCode union_of_translates(const BinaryCode& c, const std::vector<Word>& translates) {
  std::vector<Word> words;
  for (Word u : translates)
    for (Word w : c.words()) words.push_back(w ^ u);
  return BinaryCode(c.length(), std::move(words));
}

std::vector<Word> rm_generators(int m) {
  std::vector<std::string> rows;
  switch (m) {
    case 3: rows = {"11111111", "01010101", "00110011", "00001111"}; break;
    case 4:
      rows = {"1111111111111111", "0101010101010101", "0011001100110011", "0000111100001111", "0000000011111111"};
      break;
    case 5:
      rows = {"10010110011010010110100110010110", "01010101010101010101010101010101",
              "00110011001100110011001100110011", "00001111000011110000111100001111",
              "00000000111111110000000011111111", "00000000000000001111111111111111"};
      break;
    default: throw std::invalid_argument("rm_fixture: m must be 3, 4 or 5");
  }
  std::vector<Word> g;
  for (const auto& r : rows) g.push_back(word_from_string(r));
  return g;
}

BinaryCode rm_fixture(int m) { return span(1 << m, rm_generators(m)); }

SignMatrix psi_block(const BinaryCode& c, const std::vector<std::size_t>& block) {
  int n = c.length();
  Word all = low_mask(n);
  std::vector<Word> reps;
  for (std::size_t idx : block) {
    Word w = c.words().at(idx);
    Word r = lex_less(w ^ all, w) ? (w ^ all) : w;
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  if (static_cast<int>(reps.size()) != n) throw std::invalid_argument("psi_block: block does not hold n antipodal pairs");
  std::sort(reps.begin(), reps.end(), lex_less);
  return SignMatrix::generate(n, [&](int i, int j) { return ((reps[i] >> j) & 1) ? -1 : 1; });
}

std::vector<SignMatrix> psi_matrices(const BinaryCode& c, const BlockPartition& p) {
  if (!is_valid_decomposition(c, p)) throw std::invalid_argument("psi_matrices: supplied partition is not a Hadamard block decomposition");
  std::vector<SignMatrix> out;
  for (const auto& b : p) out.push_back(psi_block(c, b));
  return out;
}

std::vector<SignMatrix> psi_matrices(const BinaryCode& c) {
  if (c.size() % (2 * static_cast<std::size_t>(c.length())) != 0)
    throw std::invalid_argument("psi_matrices: code size is not a multiple of 2n");
  std::size_t f = c.size() / (2 * c.length());
  auto p = find_block_decomposition(c, f);
  if (!p) throw std::invalid_argument("psi_matrices: no decomposition into Hadamard blocks");
  return psi_matrices(c, *p);
}

namespace {

// support must equal {n/2 +- o : o in offsets} together with n/2 (if with_half) and n
bool support_is(const DistanceDistribution& d, const std::vector<int>& offsets, bool with_half) {
  int n = d.n;
  std::set<int> want{n};
  if (with_half) want.insert(n / 2);
  for (int o : offsets) {
    want.insert(n / 2 - o);
    want.insert(n / 2 + o);
  }
  auto s = d.support();
  return std::set<int>(s.begin(), s.end()) == want;
}

}  // namespace

bool check_F2(const BinaryCode& c, int alpha, int f) {
  int n = c.length();
  if (alpha <= 0 || 2 * alpha >= n || f < 1) return false;
  if (c.size() != static_cast<std::size_t>(2 * f * n)) return false;
  if (!is_self_complementary(c)) return false;
  if (!support_is(distance_distribution(c), {alpha}, true)) return false;
  return find_block_decomposition(c, f).has_value();
}

bool check_weakF2(const BinaryCode& c, int a, int b) {
  int n = c.length();
  if (a <= 0 || a >= b || 2 * b >= n || a % 2 == 0 || b % 2 == 0) return false;
  if (c.size() != static_cast<std::size_t>(4 * n)) return false;
  if (!is_self_complementary(c)) return false;
  auto d = distance_distribution(c);
  if (!support_is(d, {a, b}, true)) return false;
  if (d.counts[n / 2] != 2 * n - 2) return false;
  return find_block_decomposition(c, 2).has_value();
}

bool check_weakF2(int n, const std::vector<Word>& words, int a, int b) {
  std::vector<Word> s = words;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  return check_weakF2(BinaryCode(n, words), a, b);
}

bool check_weakIIF2(const BinaryCode& c, int a, int b, int f) {
  int n = c.length();
  if (a <= 0 || a >= b || 2 * b >= n || a % 2 || b % 2 || f < 1) return false;
  if (c.size() != static_cast<std::size_t>(2 * f * n)) return false;
  if (!is_self_complementary(c)) return false;
  auto d = distance_distribution(c);
  if (!support_is(d, {a, b}, true)) return false;
  if (d.counts[n / 2] != 2 * n - 2) return false;
  return find_block_decomposition(c, f).has_value();
}

DistanceDistribution predicted_distribution(int n, int f, int l) {
  int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(l))));
  if (root * root != l || n % (2 * root) != 0) throw std::invalid_argument("predicted_distribution: l must be (n/2alpha)^2");
  int alpha = n / (2 * root);
  std::vector<std::int64_t> counts(n + 1, 0);
  counts[0] = 1;
  counts[n] = 1;
  counts[n / 2] += 2 * n - 2 + static_cast<std::int64_t>(f - 1) * (2 * n - 2 * l);
  if (alpha < n / 2) {
    counts[n / 2 - alpha] += static_cast<std::int64_t>(f - 1) * l;
    counts[n / 2 + alpha] += static_cast<std::int64_t>(f - 1) * l;
  }
  return distribution_from_counts(n, counts);
}

namespace {

std::string strip(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

Word parse_supp_line(const std::string& line, int n) {
  std::istringstream is(line.substr(5));
  std::vector<int> s;
  int v;
  while (is >> v) {
    if (v < 1 || v > n) throw std::invalid_argument("support index out of range: " + std::to_string(v));
    s.push_back(v);
  }
  return word_from_support(s);
}

}  // namespace

BinaryCode parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  long m = -1;
  std::vector<Word> words;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    if (n < 0) {
      std::istringstream h(line);
      if (!(h >> n >> m) || n < 1 || n > 64 || m < 0) throw std::invalid_argument("bad code header: " + line);
      continue;
    }
    if (line.rfind("supp:", 0) == 0) {
      words.push_back(parse_supp_line(line, n));
    } else {
      if (static_cast<int>(line.size()) != n) throw std::invalid_argument("codeword of wrong length: " + line);
      words.push_back(word_from_string(line));
    }
  }
  if (n < 0) throw std::invalid_argument("empty code file");
  if (static_cast<long>(words.size()) != m) throw std::invalid_argument("codeword count does not match header");
  return BinaryCode(n, std::move(words));
}

std::vector<Word> parse_support_list(std::string_view text, int* n_out) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 64;
  std::vector<Word> words;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    if (line.rfind("n ", 0) == 0) {
      n = std::stoi(line.substr(2));
      continue;
    }
    if (line.rfind("supp:", 0) != 0) throw std::invalid_argument("expected 'supp:' line: " + line);
    words.push_back(parse_supp_line(line, n));
  }
  if (n_out) *n_out = n;
  return words;
}

BinaryCode read_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_code(ss.str());
}

std::string format_code(const BinaryCode& c) {
  std::string out = std::to_string(c.length()) + " " + std::to_string(c.size()) + "\n";
  for (Word w : c.words()) out += word_to_string(w, c.length()) + "\n";
  return out;
}

}  // namespace hadamard
