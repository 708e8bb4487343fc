#include "hadamard/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace hadamard {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt krawtchouk_direct(int n, int i, int z) {
  BigInt s = 0;
  for (int j = 0; j <= i; ++j) {
    BigInt t = binomial(z, j) * binomial(n - z, i - j);
    s += (j % 2) ? -t : t;
  }
  return s;
}

BigInt krawtchouk(int n, int i, int z) {
  if (i < 0 || i > n) throw std::invalid_argument("krawtchouk degree out of range");
  // (i+1) K_{i+1} = (n - 2z) K_i - (n - i + 1) K_{i-1}
  BigInt prev = 1, cur = n - 2 * z;
  if (i == 0) return prev;
  for (int k = 1; k < i; ++k) {
    BigInt next = ((n - 2 * z) * cur - (n - k + 1) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational KrawtchoukExpansion::coeff(int i) const {
  auto it = coeffs.find(i);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Rational KrawtchoukExpansion::evaluate(int z) const {
  Rational s = 0;
  for (const auto& [i, a] : coeffs) s += a * Rational(krawtchouk(n, i, z));
  return s;
}

namespace {

void check_distance_set(int n, const std::vector<int>& S) {
  if (std::find(S.begin(), S.end(), n) == S.end()) throw std::invalid_argument("distance set must contain n");
  for (int i : S) {
    if (i < 1 || i > n) throw std::invalid_argument("distance out of range");
    if (i != n && std::find(S.begin(), S.end(), n - i) == S.end())
      throw std::invalid_argument("distance set is not closed under i -> n - i");
  }
}

}  // namespace

KrawtchoukExpansion annihilator_expansion(int n, const std::vector<int>& S) {
  check_distance_set(n, S);
  std::vector<int> roots;
  for (int i : S)
    if (i != n && std::find(roots.begin(), roots.end(), i) == roots.end()) roots.push_back(i);
  std::vector<Rational> value(n + 1);
  for (int z = 0; z <= n; ++z) {
    Rational v = 1;
    for (int i : roots) v *= Rational(1) - Rational(z, i);
    value[z] = v;
  }
  // orthogonality: sum_z C(n,z) K_i(z) K_j(z) = 2^n C(n,i) delta_ij
  KrawtchoukExpansion e;
  e.n = n;
  BigInt two_n = BigInt(1) << n;
  int deg = static_cast<int>(roots.size());
  for (int i = 0; i <= deg; ++i) {
    Rational s = 0;
    for (int z = 0; z <= n; ++z)
      if (value[z] != 0) s += value[z] * Rational(binomial(n, z) * krawtchouk(n, i, z));
    s /= Rational(two_n * binomial(n, i));
    if (s != 0) e.coeffs[i] = s;
  }
  return e;
}

BigInt absolute_bound(int n, int s) {
  if (s < 1 || s > n) throw std::invalid_argument("degree out of range");
  BigInt sum = 0;
  for (int i = (s - 1) % 2; i <= s - 1; i += 2) sum += binomial(n, i);
  return 2 * sum;
}

std::optional<BigInt> lp_bound(int n, const std::vector<int>& S) {
  KrawtchoukExpansion e = annihilator_expansion(n, S);
  for (const auto& [i, a] : e.coeffs)
    if (a < 0) return std::nullopt;
  int s = 0;
  for (int i : S) s += (i >= 1);
  int delta = (s % 2) ? 0 : 1;
  Rational ad = e.coeff(delta);
  if (ad <= 0) return std::nullopt;
  Rational q = Rational(2) / ad;
  return BigInt(numerator(q) / denominator(q));
}

long matrix_bound_from_code_bound(const BigInt& code_bound, int n) {
  return static_cast<long>(code_bound / (2 * n));
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

QubBounds qub_bounds(int n, int alpha) {
  if (alpha <= 0 || 2 * alpha >= n) throw std::invalid_argument("need 0 < alpha < n/2");
  QubBounds b;
  long num = static_cast<long>(n) * n - 3L * n + 8;
  b.absolute = floor_div(num, 6);
  bool attained = num % 6 == 0;
  b.absolute_refined = (attained && 4L * alpha * alpha != 3L * n - 8) ? b.absolute - 1 : b.absolute;
  long den = 3L * n - 4L * alpha * alpha - 2;
  if (den > 0) b.lp = floor_div(static_cast<long>(n) * n - 4L * alpha * alpha, den);
  return b;
}

WeakIIBounds weakII_bounds(int n, int a, int b) {
  if (!(0 < a && a < b && 2 * b < n)) throw std::invalid_argument("need 0 < a < b < n/2");
  WeakIIBounds r;
  long nn = n;
  long num = nn * nn * nn * nn - 10 * nn * nn * nn + 55 * nn * nn - 110 * nn + 184;
  r.absolute = floor_div(num, 120);
  long a2 = static_cast<long>(a) * a, b2 = static_cast<long>(b) * b;
  long d = 15 * nn * nn - 30 * nn + 16 - 4 * (3 * nn - 2) * (a2 + b2) + 16 * a2 * b2;
  if (d > 0 && 5 * (nn - 2) - 2 * a2 - 2 * b2 >= 0) r.lp = floor_div((nn * nn - 4 * a2) * (nn * nn - 4 * b2), d);
  return r;
}

}  // namespace hadamard
