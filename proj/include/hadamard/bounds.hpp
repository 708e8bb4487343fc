#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hadamard/binary_code.hpp"

namespace hadamard {

BigInt binomial(int n, int k);

// K_i(z) for length n, by the three-term recursion in i
BigInt krawtchouk(int n, int i, int z);
// sum_j (-1)^j C(z,j) C(n-z,i-j)
BigInt krawtchouk_direct(int n, int i, int z);

struct KrawtchoukExpansion {
  int n = 0;
  std::map<int, Rational> coeffs;  // degree -> alpha_i, zeros omitted

  Rational coeff(int i) const;
  Rational evaluate(int z) const;
};

// prod over S \ {n} of (1 - z/i); S must contain n and be closed under i -> n - i
KrawtchoukExpansion annihilator_expansion(int n, const std::vector<int>& S);

// code-size bounds
BigInt absolute_bound(int n, int s);
std::optional<BigInt> lp_bound(int n, const std::vector<int>& S);

struct QubBounds {
  long absolute = 0;          // floor((n^2 - 3n + 8)/6)
  long absolute_refined = 0;  // one less when the raw value is attained only with 4 alpha^2 = 3n - 8
  std::optional<long> lp;     // present iff 3n - 4 alpha^2 - 2 > 0
  // value shown in the bounds table: refined where no LP bound applies
  long table_absolute() const { return lp ? absolute : absolute_refined; }
};
QubBounds qub_bounds(int n, int alpha);

struct WeakIIBounds {
  long absolute = 0;
  std::optional<long> lp;
};
// a, b are half the entries of sigma
WeakIIBounds weakII_bounds(int n, int a, int b);

// the same matrix-count bounds obtained from the expansion route
long matrix_bound_from_code_bound(const BigInt& code_bound, int n);

struct SchemeReport {
  bool ok = false;
  std::string failure;
  std::vector<int> distances;                      // class i <-> distance distances[i]
  std::vector<std::vector<std::vector<long>>> p;  // p[i][j][k]
};
// throws when the code has more than four nonzero distances
SchemeReport verify_association_scheme(const BinaryCode& c);

}  // namespace hadamard
