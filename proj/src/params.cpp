#include <algorithm>

#include "hadamard/core.hpp"

namespace hadamard {

std::vector<QubParams> feasible_qub_params(int n) {
  std::vector<QubParams> out;
  for (std::int64_t alpha = 1; 2 * alpha <= n; ++alpha) {
    if (n % (2 * alpha) != 0 || n > 4 * alpha * alpha) continue;
    std::int64_t root = n / (2 * alpha);
    QubParams p{root * root, 4 * alpha * alpha, alpha, ParamStatus::Open, RuledOutReason::None};
    if (n != 4 * alpha * alpha && alpha % 2 == 1) {
      p.status = ParamStatus::RuledOut;
      if (n % 4 == 0 && n / 4 >= 5 && n / 4 % 2 == 1 && is_prime(n / 4))
        p.reason = RuledOutReason::FourPrimeCorollary;
      else if (n % 8 == 4 && n >= 12 && alpha == n / 4)
        p.reason = RuledOutReason::Mod8Corollary;
      else
        p.reason = RuledOutReason::AlphaParityProp;
    }
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const QubParams& x, const QubParams& y) { return x.l > y.l; });
  return out;
}

std::vector<WeakParams> feasible_weak_params(int n, int modulus) {
  std::vector<WeakParams> out;
  std::int64_t nn = static_cast<std::int64_t>(n) * n;
  for (std::int64_t a = 1; a < n; ++a) {
    if (a % 4 != modulus) continue;
    for (std::int64_t b = a + 1; b < n; ++b) {
      if (b % 4 != modulus) continue;
      // a^2 na + b^2 (n - na) = n^2
      std::int64_t num = b * b * n - nn;
      std::int64_t den = b * b - a * a;
      if (num <= 0 || num % den != 0) continue;
      std::int64_t na = num / den;
      if (na > 0 && na < n) out.push_back({a, b, na});
    }
  }
  return out;
}

}  // namespace hadamard
