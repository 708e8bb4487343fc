#pragma once

#include <cstdint>
#include <string>

// Randomized and exhaustive checks shared by the property suite and the
// acceptance runner. Each returns ok plus a one-line summary.

namespace props {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome gray_isometry(int codes, std::uint64_t seed);
Outcome krawtchouk_recursion(int n_max);
Outcome monomial_invariance(int trials, std::uint64_t seed);
Outcome weak_triples(std::uint64_t seed);
Outcome clique_vs_brute_force(int graphs, std::uint64_t seed);
Outcome canonical_vs_brute_force(int graphs, std::uint64_t seed);
Outcome scheme_control();

}  // namespace props
