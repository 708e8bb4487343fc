#include "hadamard/z4_code.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hadamard/canonical.hpp"

namespace hadamard {

void Z4Word::set(int j, int v) {
  std::uint32_t b = 1u << j;
  lo = (v & 1) ? (lo | b) : (lo & ~b);
  hi = (v & 2) ? (hi | b) : (hi & ~b);
}

int z4_balance(Z4Word x, int n) {
  std::uint32_t m = z4_mask(n);
  return std::popcount(~x.lo & ~x.hi & m) - std::popcount(~x.lo & x.hi & m);
}

int lee_weight(Z4Word x) { return std::popcount(x.lo) + 2 * std::popcount(x.hi & ~x.lo); }
int hamming_weight(Z4Word x) { return std::popcount(x.lo | x.hi); }

Z4Word z4_from_string(std::string_view digits) {
  if (digits.size() > 32) throw std::invalid_argument("Z4 word longer than 32");
  Z4Word w;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    char ch = digits[j];
    if (ch < '0' || ch > '3') throw std::invalid_argument("bad Z4 digit in: " + std::string(digits));
    w.set(static_cast<int>(j), ch - '0');
  }
  return w;
}

std::string z4_to_string(Z4Word x, int n) {
  std::string s(n, '0');
  for (int j = 0; j < n; ++j) s[j] = static_cast<char>('0' + x.at(j));
  return s;
}

Z4LinearCode::Z4LinearCode(int n, std::vector<Z4Word> generators) : n_(n), gens_(std::move(generators)) {
  if (n < 1 || n > 32) throw std::invalid_argument("Z4 code length must be in 1..32");
  std::uint32_t m = z4_mask(n);
  std::unordered_set<std::uint64_t> seen{0};
  words_.push_back(Z4Word{});
  for (Z4Word g : gens_) {
    if ((g.lo & ~m) || (g.hi & ~m)) throw std::invalid_argument("generator longer than code length");
    if (seen.count(g.key())) continue;
    std::size_t base = words_.size();
    for (int k = 1; k < 4; ++k) {
      Z4Word step{};
      for (int t = 0; t < k; ++t) step = step + g;
      for (std::size_t i = 0; i < base; ++i) {
        Z4Word w = words_[i] + step;
        if (seen.insert(w.key()).second) {
          words_.push_back(w);
          if (words_.size() > kMaxWords) throw std::length_error("Z4 code exceeds the enumeration cap");
        }
      }
    }
  }
  sorted_.reserve(words_.size());
  for (Z4Word w : words_) sorted_.push_back(w.key());
  std::sort(sorted_.begin(), sorted_.end());
}

int Z4LinearCode::log2_size() const { return std::countr_zero(words_.size()); }

bool Z4LinearCode::contains(Z4Word x) const { return std::binary_search(sorted_.begin(), sorted_.end(), x.key()); }

std::vector<Word> echelon_basis(std::vector<Word> vectors, int n) {
  std::vector<Word> basis;
  for (int col = 0; col < n; ++col) {
    Word bit = Word{1} << col;
    auto it = std::find_if(vectors.begin(), vectors.end(), [&](Word v) { return v & bit; });
    if (it == vectors.end()) continue;
    Word p = *it;
    vectors.erase(it);
    for (Word& v : vectors)
      if (v & bit) v ^= p;
    for (Word& b : basis)
      if (b & bit) b ^= p;
    basis.push_back(p);
  }
  return basis;
}

std::vector<Word> complement_basis(const std::vector<Word>& sub, const std::vector<Word>& super, int n) {
  std::vector<Word> ech = echelon_basis(sub, n);
  std::vector<Word> out;
  auto reduce = [&](Word v) {
    for (Word b : ech) {
      Word lowest = b & (~b + 1);
      if (v & lowest) v ^= b;
    }
    return v;
  };
  for (Word s : super) {
    Word r = reduce(s);
    if (!r) continue;
    out.push_back(s);
    ech.push_back(r);
    ech = echelon_basis(ech, n);
  }
  return out;
}

std::vector<Word> Z4LinearCode::residue_basis() const {
  std::vector<Word> v;
  for (Z4Word g : gens_) v.push_back(g.lo);
  return echelon_basis(v, n_);
}

std::vector<Word> Z4LinearCode::torsion_basis() const {
  std::vector<Word> v;
  for (Z4Word w : words_)
    if (!w.lo) v.push_back(w.hi);
  return echelon_basis(v, n_);
}

std::pair<int, int> Z4LinearCode::type() const {
  int k1 = static_cast<int>(residue_basis().size());
  int k2 = static_cast<int>(torsion_basis().size()) - k1;
  return {k1, k2};
}

std::vector<Z4Word> Z4LinearCode::standard_form() const {
  std::vector<Z4Word> rows;
  std::vector<Word> res = residue_basis();
  for (Word r : res) {
    // smallest lift in key order
    const Z4Word* best = nullptr;
    for (const Z4Word& w : words_)
      if (w.lo == r && (!best || w.key() < best->key())) best = &w;
    rows.push_back(*best);
  }
  for (Word t : complement_basis(res, torsion_basis(), n_)) rows.push_back(Z4Word{0, static_cast<std::uint32_t>(t)});
  return rows;
}

Z4LinearCode Z4LinearCode::extend(Z4Word x) const {
  std::vector<Z4Word> g = gens_;
  g.push_back(x);
  return Z4LinearCode(n_, std::move(g));
}

DistanceDistribution lee_distribution(const Z4LinearCode& c) {
  std::vector<std::int64_t> counts(2 * c.length() + 1, 0);
  for (Z4Word w : c.words()) counts[lee_weight(w)]++;
  // linear: every codeword sees the same distance profile
  DistanceDistribution d;
  d.n = 2 * c.length();
  for (auto k : counts) d.counts.emplace_back(k);
  return d;
}

DistanceDistribution hamming_distribution(const Z4LinearCode& c) {
  DistanceDistribution d;
  d.n = c.length();
  std::vector<std::int64_t> counts(c.length() + 1, 0);
  for (Z4Word w : c.words()) counts[hamming_weight(w)]++;
  for (auto k : counts) d.counts.emplace_back(k);
  return d;
}

int min_hamming_distance(const Z4LinearCode& c) {
  if (c.size() < 2) throw std::invalid_argument("min distance needs at least two codewords");
  int best = c.length();
  for (Z4Word w : c.words())
    if (w.lo | w.hi) best = std::min(best, hamming_weight(w));
  return best;
}

int min_lee_distance(const Z4LinearCode& c) {
  if (c.size() < 2) throw std::invalid_argument("min distance needs at least two codewords");
  int best = 2 * c.length();
  for (Z4Word w : c.words())
    if (w.lo | w.hi) best = std::min(best, lee_weight(w));
  return best;
}

Word gray_word(Z4Word x, int n) {
  Word out = 0;
  for (int j = 0; j < n; ++j) {
    Word hi = (x.hi >> j) & 1u;
    Word lo = (x.lo >> j) & 1u;
    out |= hi << (2 * j);
    out |= (lo ^ hi) << (2 * j + 1);
  }
  return out;
}

BinaryCode gray_map(const Z4LinearCode& c) {
  std::vector<Word> w;
  w.reserve(c.size());
  for (Z4Word x : c.words()) w.push_back(gray_word(x, c.length()));
  return BinaryCode(2 * c.length(), std::move(w));
}

std::vector<Z4Word> zrm_generators(int m) {
  if (m < 2 || m > 4) throw std::invalid_argument("ZRM(1,m) fixture exists for m = 2, 3, 4");
  int n = 1 << m;
  std::vector<Z4Word> g;
  g.push_back(Z4Word{z4_mask(n), 0});
  for (int i = 0; i < m; ++i) {
    Z4Word r;
    for (int j = 0; j < n; ++j)
      if ((j >> i) & 1) r.set(j, 2);
    g.push_back(r);
  }
  return g;
}

Z4LinearCode zrm_fixture(int m) { return Z4LinearCode(1 << m, zrm_generators(m)); }

namespace {

// GR(4,4) = Z4[x]/(x^4 + 2x^2 + 3x + 1)
using GR = std::array<int, 4>;

GR gr_mul(const GR& a, const GR& b) {
  std::array<int, 7> p{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p[i + j] += a[i] * b[j];
  // x^4 = -(2x^2 + 3x + 1) = 2x^2 + x + 3
  for (int k = 6; k >= 4; --k) {
    int c = p[k] % 4;
    p[k] = 0;
    p[k - 4] += 3 * c;
    p[k - 3] += 1 * c;
    p[k - 2] += 2 * c;
  }
  GR r;
  for (int i = 0; i < 4; ++i) r[i] = ((p[i] % 4) + 4) % 4;
  return r;
}

GR gr_pow_xi(int s) {
  GR r{1, 0, 0, 0};
  GR xi{0, 1, 0, 0};
  for (int i = 0; i < ((s % 15) + 15) % 15; ++i) r = gr_mul(r, xi);
  return r;
}

int trace_xi(int s) {
  GR sum{0, 0, 0, 0};
  for (int k = 0; k < 4; ++k) {
    GR t = gr_pow_xi(s * (1 << k));
    for (int i = 0; i < 4; ++i) sum[i] = (sum[i] + t[i]) % 4;
  }
  if (sum[1] || sum[2] || sum[3]) throw std::logic_error("trace left the base ring");
  return sum[0];
}

}  // namespace

Z4LinearCode kerdock_fixture() {
  if (gr_pow_xi(15) != GR{1, 0, 0, 0} || gr_pow_xi(0) != GR{1, 0, 0, 0})
    throw std::logic_error("xi is not a 15th root of unity");
  std::vector<Z4Word> g;
  g.push_back(Z4Word{z4_mask(16), 0});
  for (int i = 0; i < 4; ++i) {
    Z4Word r;  // position 0 is the zero element of the field
    for (int t = 0; t < 15; ++t) r.set(t + 1, trace_xi(i + t));
    g.push_back(r);
  }
  return Z4LinearCode(16, std::move(g));
}

namespace {

int power_of_two_exponent(int n) {
  if (n < 1 || (n & (n - 1))) throw std::invalid_argument("code length must be a power of 2");
  return std::countr_zero(static_cast<unsigned>(n));
}

bool contains_zrm(const Z4LinearCode& c) {
  int m = power_of_two_exponent(c.length());
  if (m < 2 || m > 4) return false;
  for (Z4Word g : zrm_generators(m))
    if (!c.contains(g)) return false;
  return true;
}

// distinct |n0 - n2| values strictly between 0 and n, plus the zero count
std::pair<std::vector<int>, std::size_t> balance_profile(const Z4LinearCode& c) {
  std::vector<int> vals;
  std::size_t zeros = 0;
  int n = c.length();
  for (Z4Word w : c.words()) {
    int d = std::abs(z4_balance(w, n));
    if (d == 0) ++zeros;
    else if (d != n && std::find(vals.begin(), vals.end(), d) == vals.end()) vals.push_back(d);
  }
  std::sort(vals.begin(), vals.end());
  return {vals, zeros};
}

bool has_extremes(const Z4LinearCode& c) {
  int n = c.length();
  bool full = false;
  for (Z4Word w : c.words())
    if (std::abs(z4_balance(w, n)) == n && (w.lo | w.hi)) full = true;
  return full;
}

}  // namespace

std::optional<int> check_z4_qub(const Z4LinearCode& c) {
  power_of_two_exponent(c.length());
  if (!contains_zrm(c)) return std::nullopt;
  auto [vals, zeros] = balance_profile(c);
  if (vals.size() != 1 || zeros == 0 || !has_extremes(c)) return std::nullopt;
  return vals[0];
}

std::optional<std::pair<int, int>> check_z4_weak(const Z4LinearCode& c, Parity parity) {
  power_of_two_exponent(c.length());
  if (!contains_zrm(c)) return std::nullopt;
  auto [vals, zeros] = balance_profile(c);
  if (vals.size() != 2 || zeros != static_cast<std::size_t>(4 * c.length() - 2)) return std::nullopt;
  int want = parity == Parity::Odd ? 1 : 0;
  for (int v : vals)
    if (v % 2 != want) return std::nullopt;
  return std::make_pair(vals[0], vals[1]);
}

ColoredGraph gamma_digraph(const Z4LinearCode& c) {
  int n = c.length();
  std::vector<Z4Word> nz;
  for (Z4Word w : c.words())
    if (w.lo | w.hi) nz.push_back(w);
  std::sort(nz.begin(), nz.end(), [](Z4Word a, Z4Word b) { return a.key() < b.key(); });
  int m = static_cast<int>(nz.size());
  std::vector<int> colors(m + 3 * n, 1);
  std::fill(colors.begin(), colors.begin() + m, 0);
  std::vector<std::pair<int, int>> arcs;
  auto vtx = [&](int j, int x) { return m + 3 * j + (x - 1); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (int x = nz[i].at(j)) arcs.emplace_back(i, vtx(j, x));
  for (int j = 0; j < n; ++j)
    for (int x : {1, 3}) {
      arcs.emplace_back(vtx(j, x), vtx(j, 2));
      arcs.emplace_back(vtx(j, 2), vtx(j, x));
    }
  return ColoredGraph(m + 3 * n, std::move(colors), std::move(arcs));
}

std::string z4_certificate(const Z4LinearCode& c) { return canonical_form(gamma_digraph(c)); }

bool z4_equivalent(const Z4LinearCode& a, const Z4LinearCode& b) {
  if (a.length() != b.length() || a.size() != b.size()) return false;
  return z4_certificate(a) == z4_certificate(b);
}

Z4LinearCode z4_transform(const Z4LinearCode& c, const std::vector<int>& perm, std::uint32_t flips) {
  std::vector<Z4Word> g;
  for (Z4Word w : c.generators()) {
    Z4Word r;
    for (int j = 0; j < c.length(); ++j) {
      int v = w.at(j);
      if ((flips >> perm[j]) & 1u) v = (4 - v) % 4;
      r.set(perm[j], v);
    }
    g.push_back(r);
  }
  return Z4LinearCode(c.length(), std::move(g));
}

Z4LinearCode parse_z4_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1, k = -1;
  std::vector<Z4Word> g;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t s = line.find_first_not_of(" \t");
    if (s == std::string::npos) continue;
    line = line.substr(s);
    if (n < 0) {
      std::istringstream h(line);
      if (!(h >> n >> k) || n < 1 || n > 32 || k < 0) throw std::invalid_argument("bad Z4 code header: " + line);
      continue;
    }
    if (static_cast<int>(line.size()) != n) throw std::invalid_argument("generator of wrong length: " + line);
    g.push_back(z4_from_string(line));
  }
  if (n < 0) throw std::invalid_argument("empty Z4 code file");
  if (static_cast<int>(g.size()) != k) throw std::invalid_argument("generator count does not match header");
  return Z4LinearCode(n, std::move(g));
}

Z4LinearCode read_z4_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_z4_code(ss.str());
}

std::string format_z4_code(const Z4LinearCode& c) {
  std::string out = std::to_string(c.length()) + " " + std::to_string(c.generators().size()) + "\n";
  for (Z4Word g : c.generators()) out += z4_to_string(g, c.length()) + "\n";
  return out;
}

}  // namespace hadamard
