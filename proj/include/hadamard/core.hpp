#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hadamard/sign_matrix.hpp"

namespace hadamard {

bool is_hadamard(const SignMatrix& m);
bool is_weighing(const SignMatrix& m, int k);

enum class PairKind { NotHadamardPair, QuasiUnbiased, WeaklyUnbiased, TypeIIWeaklyUnbiased, Irregular };

std::string to_string(PairKind k);

struct PairClassification {
  PairKind kind = PairKind::NotHadamardPair;
  std::int64_t l = 0;                  // QuasiUnbiased
  std::int64_t a = 0;                  // QuasiUnbiased: squared entry value
  std::array<std::int64_t, 2> sigma{};  // weak kinds, ascending
  std::int64_t n_a = 0;                // weak kinds: entries of absolute value sigma[0] per row
  std::map<std::int64_t, std::int64_t> abs_counts;  // |entry| -> count over the whole product

  static PairClassification quasi_unbiased(std::int64_t l, std::int64_t a);
  static PairClassification weakly_unbiased(std::int64_t a, std::int64_t b);
  static PairClassification type2(std::int64_t a, std::int64_t b);

  // kind and parameters, ignoring the diagnostics
  bool matches(const PairClassification& expected) const;
  std::string describe() const;
};

PairClassification classify_pair(const SignMatrix& h, const SignMatrix& k);
bool check_mutual(const std::vector<SignMatrix>& ms, const PairClassification& expected);

SignMatrix normalize(const SignMatrix& h);
SignMatrix circulant_bordered(const std::vector<int>& first_row);
SignMatrix circulant_bordered(const std::string& first_row);  // "+-" notation
SignMatrix sylvester(int n);                                  // n a power of 2

std::vector<SignMatrix> kronecker_qub(const std::vector<SignMatrix>& hs, const std::vector<SignMatrix>& ks);
SignMatrix m_construction(const SignMatrix& h, const SignMatrix& k);
// Applies m_construction(., k) to every member and checks the result is
// mutually quasi-unbiased with (l, 4 a (order(k)/4)^2).
std::vector<SignMatrix> m_construction_set(const std::vector<SignMatrix>& hs, const SignMatrix& k);
SignMatrix negate_first_column(const SignMatrix& h);

// Paley type I (q prime, q = 3 mod 4) and type II (q prime, q = 1 mod 4).
SignMatrix paley1(int q);
SignMatrix paley2(int q);

enum class ParamStatus { Open, RuledOut };
enum class RuledOutReason { None, AlphaParityProp, Mod8Corollary, FourPrimeCorollary };

struct QubParams {
  std::int64_t l, a, alpha;
  ParamStatus status;
  RuledOutReason reason;
};

struct WeakParams {
  std::int64_t a, b, n_a;
  bool operator==(const WeakParams&) const = default;
};

std::vector<QubParams> feasible_qub_params(int n);
std::vector<WeakParams> feasible_weak_params(int n, int modulus);

std::string to_string(RuledOutReason r);
bool is_prime(std::int64_t p);

}  // namespace hadamard
