#include "hadamard/core.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hadamard {

bool is_hadamard(const SignMatrix& m) {
  int n = m.order();
  for (int i = 0; i < n; ++i)
    if (m.row_weight(i) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.row_dot(i, m, j) != 0) return false;
  return true;
}

bool is_weighing(const SignMatrix& m, int k) {
  int n = m.order();
  for (int i = 0; i < n; ++i) {
    if (m.row_weight(i) != k) return false;
    for (int j = i + 1; j < n; ++j)
      if (m.row_dot(i, m, j) != 0) return false;
  }
  // rows orthogonal with weight k gives M M^T = kI, which forces M^T M = kI
  return true;
}

std::string to_string(PairKind k) {
  switch (k) {
    case PairKind::NotHadamardPair: return "NotHadamardPair";
    case PairKind::QuasiUnbiased: return "QuasiUnbiased";
    case PairKind::WeaklyUnbiased: return "WeaklyUnbiased";
    case PairKind::TypeIIWeaklyUnbiased: return "TypeIIWeaklyUnbiased";
    case PairKind::Irregular: return "Irregular";
  }
  return "?";
}

PairClassification PairClassification::quasi_unbiased(std::int64_t l, std::int64_t a) {
  PairClassification c;
  c.kind = PairKind::QuasiUnbiased;
  c.l = l;
  c.a = a;
  return c;
}

PairClassification PairClassification::weakly_unbiased(std::int64_t a, std::int64_t b) {
  PairClassification c;
  c.kind = PairKind::WeaklyUnbiased;
  c.sigma = {std::min(a, b), std::max(a, b)};
  return c;
}

PairClassification PairClassification::type2(std::int64_t a, std::int64_t b) {
  PairClassification c;
  c.kind = PairKind::TypeIIWeaklyUnbiased;
  c.sigma = {std::min(a, b), std::max(a, b)};
  return c;
}

bool PairClassification::matches(const PairClassification& e) const {
  if (kind != e.kind) return false;
  switch (kind) {
    case PairKind::QuasiUnbiased: return l == e.l && a == e.a;
    case PairKind::WeaklyUnbiased:
    case PairKind::TypeIIWeaklyUnbiased: return sigma == e.sigma;
    default: return true;
  }
}

std::string PairClassification::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind == PairKind::QuasiUnbiased) os << "(l=" << l << ", a=" << a << ")";
  if (kind == PairKind::WeaklyUnbiased || kind == PairKind::TypeIIWeaklyUnbiased)
    os << "(sigma={" << sigma[0] << "," << sigma[1] << "}, n_a=" << n_a << ")";
  if (kind == PairKind::Irregular) {
    os << " |entries|:";
    for (auto [v, c] : abs_counts) os << " " << v << "x" << c;
  }
  return os.str();
}

PairClassification classify_pair(const SignMatrix& h, const SignMatrix& k) {
  PairClassification out;
  if (h.order() != k.order() || !is_hadamard(h) || !is_hadamard(k)) return out;
  int n = h.order();
  std::vector<long> p = gram(h, k);
  for (long v : p) out.abs_counts[std::labs(v)]++;

  std::vector<std::int64_t> nonzero;
  for (auto [v, c] : out.abs_counts)
    if (v != 0) nonzero.push_back(v);

  if (nonzero.size() == 1) {
    std::int64_t c = nonzero[0];
    out.kind = PairKind::QuasiUnbiased;
    out.a = c * c;
    out.l = static_cast<std::int64_t>(n) * n / out.a;
    out.abs_counts.clear();
    return out;
  }
  if (nonzero.size() == 2 && !out.abs_counts.count(0)) {
    std::int64_t a = nonzero[0], b = nonzero[1];
    bool mod2 = a % 4 == 2 && b % 4 == 2;
    bool mod0 = a % 4 == 0 && b % 4 == 0;
    if (mod2 || mod0) {
      std::int64_t na = 0;
      for (int j = 0; j < n; ++j)
        if (std::labs(p[j]) == a) ++na;
      // every row must carry the same split
      bool regular = true;
      for (int i = 1; i < n && regular; ++i) {
        std::int64_t c = 0;
        for (int j = 0; j < n; ++j)
          if (std::labs(p[static_cast<std::size_t>(i) * n + j]) == a) ++c;
        regular = c == na;
      }
      if (regular) {
        out.kind = mod2 ? PairKind::WeaklyUnbiased : PairKind::TypeIIWeaklyUnbiased;
        out.sigma = {a, b};
        out.n_a = na;
        out.abs_counts.clear();
        return out;
      }
    }
  }
  out.kind = PairKind::Irregular;
  return out;
}

bool check_mutual(const std::vector<SignMatrix>& ms, const PairClassification& expected) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!classify_pair(ms[i], ms[j]).matches(expected)) return false;
  return true;
}

SignMatrix normalize(const SignMatrix& h) {
  if (!is_hadamard(h)) throw std::invalid_argument("normalize: input is not Hadamard");
  int n = h.order();
  std::vector<int> col(n), row(n);
  for (int j = 0; j < n; ++j) col[j] = h.at(0, j);
  for (int i = 0; i < n; ++i) row[i] = h.at(i, 0) * col[0];
  return SignMatrix::generate(n, [&](int i, int j) { return h.at(i, j) * col[j] * row[i]; });
}

SignMatrix circulant_bordered(const std::vector<int>& r) {
  int m = static_cast<int>(r.size());
  int n = m + 1;
  if (!(n == 2 || n % 4 == 0)) throw std::invalid_argument("circulant_bordered: order must be 2 or divisible by 4");
  return SignMatrix::generate(n, [&](int i, int j) {
    if (i == 0 || j == 0) return 1;
    return r[((j - i) % m + m) % m];
  });
}

SignMatrix circulant_bordered(const std::string& s) {
  std::vector<int> r;
  for (char c : s) {
    if (c == '+') r.push_back(1);
    else if (c == '-') r.push_back(-1);
    else throw std::invalid_argument("circulant_bordered: bad sign character");
  }
  return circulant_bordered(r);
}

SignMatrix sylvester(int n) {
  if (n < 1 || (n & (n - 1))) throw std::invalid_argument("sylvester: order must be a power of two");
  return SignMatrix::generate(n, [](int i, int j) { return (std::popcount(static_cast<unsigned>(i & j)) & 1) ? -1 : 1; });
}

std::vector<SignMatrix> kronecker_qub(const std::vector<SignMatrix>& hs, const std::vector<SignMatrix>& ks) {
  if (hs.size() != ks.size() || hs.empty()) throw std::invalid_argument("kronecker_qub: lists must have equal nonzero length");
  auto kind_of = [](const std::vector<SignMatrix>& v) {
    for (const auto& m : v)
      if (!is_hadamard(m)) throw std::invalid_argument("kronecker_qub: input is not Hadamard");
    if (v.size() < 2) return PairClassification{};
    PairClassification c = classify_pair(v[0], v[1]);
    if (c.kind != PairKind::QuasiUnbiased || !check_mutual(v, c))
      throw std::invalid_argument("kronecker_qub: inputs are not mutually quasi-unbiased");
    return c;
  };
  kind_of(hs);
  kind_of(ks);
  std::vector<SignMatrix> out;
  for (std::size_t i = 0; i < hs.size(); ++i) out.push_back(kronecker(hs[i], ks[i]));
  return out;
}

SignMatrix m_construction(const SignMatrix& h, const SignMatrix& k) {
  int hn = h.order(), kn = k.order();
  if (hn % 2 || kn % 2) throw std::invalid_argument("m_construction: orders must be even");
  if (!is_hadamard(h) || !is_hadamard(k)) throw std::invalid_argument("m_construction: inputs must be Hadamard");
  int half = hn / 2, khalf = kn / 2;
  // rows indexed (i, r) with i < hn, r < khalf; columns (c, s) with c < half, s < kn
  return SignMatrix::generate(hn * khalf, [&](int row, int col) {
    int i = row / khalf, r = row % khalf;
    int c = col / kn, s = col % kn;
    int h1 = h.at(i, c), h2 = h.at(i, c + half);
    int plus = (h1 + h2) / 2, minus = (h1 - h2) / 2;
    return plus * k.at(r, s) + minus * k.at(r + khalf, s);
  });
}

std::vector<SignMatrix> m_construction_set(const std::vector<SignMatrix>& hs, const SignMatrix& k) {
  if (hs.empty()) throw std::invalid_argument("m_construction_set: empty input");
  std::vector<SignMatrix> out;
  for (const auto& h : hs) out.push_back(m_construction(h, k));
  if (hs.size() >= 2) {
    PairClassification in = classify_pair(hs[0], hs[1]);
    if (in.kind != PairKind::QuasiUnbiased || !check_mutual(hs, in))
      throw std::invalid_argument("m_construction_set: inputs are not mutually quasi-unbiased");
    std::int64_t q = k.order() / 4;
    PairClassification want = PairClassification::quasi_unbiased(in.l, 4 * in.a * q * q);
    if (!check_mutual(out, want))
      throw std::runtime_error("m_construction_set: output is not quasi-unbiased with " + want.describe());
  }
  return out;
}

SignMatrix negate_first_column(const SignMatrix& h) {
  if (!is_hadamard(h)) throw std::invalid_argument("negate_first_column: input is not Hadamard");
  if (h.order() < 8) throw std::invalid_argument("negate_first_column: order must be at least 8");
  return h.negate_col(0);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

int legendre(int x, int q) {
  x = ((x % q) + q) % q;
  if (x == 0) return 0;
  long r = 1, b = x, e = (q - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

SignMatrix paley1(int q) {
  if (!is_prime(q) || q % 4 != 3) throw std::invalid_argument("paley1: q must be a prime = 3 mod 4");
  return SignMatrix::generate(q + 1, [&](int i, int j) {
    if (i == j) return 1;
    if (i == 0) return 1;
    if (j == 0) return -1;
    return legendre(j - i, q);
  });
}

SignMatrix paley2(int q) {
  if (!is_prime(q) || q % 4 != 1) throw std::invalid_argument("paley2: q must be a prime = 1 mod 4");
  int m = q + 1;
  auto conf = [&](int i, int j) {
    if (i == j) return 0;
    if (i == 0 || j == 0) return 1;
    return legendre(j - i, q);
  };
  return SignMatrix::generate(2 * m, [&](int r, int c) {
    int i = r / 2, a = r % 2, j = c / 2, b = c % 2;
    int v = conf(i, j);
    if (v != 0) return (a == 1 && b == 1) ? -v : v;
    return (a == 0 && b == 0) ? 1 : -1;
  });
}

std::string to_string(RuledOutReason r) {
  switch (r) {
    case RuledOutReason::None: return "-";
    case RuledOutReason::AlphaParityProp: return "AlphaParityProp";
    case RuledOutReason::Mod8Corollary: return "Mod8Corollary";
    case RuledOutReason::FourPrimeCorollary: return "FourPrimeCorollary";
  }
  return "?";
}

}  // namespace hadamard
