#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hadamard/binary_code.hpp"
#include "hadamard/graph.hpp"

namespace hadamard {

struct CanonicalResult {
  std::vector<int> labeling;  // vertex -> canonical position
  std::string form;
  std::vector<std::vector<int>> generators;  // automorphisms met during the search
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

CanonicalResult canonical_labeling(const ColoredGraph& g);
std::string canonical_form(const ColoredGraph& g);
bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);

// Rows colored 0, columns colored 1, edge where the incidence entry is 1.
ColoredGraph incidence_graph(const BinaryCode& c);
// Minimum over codeword translates of the incidence-graph form.
std::string code_canonical_form(const BinaryCode& c);

// Codeword vertices plus a pair (j,0),(j,1) per coordinate; c -> (j, c_j).
// Two codes get equal forms iff D = x + sigma(C) for a permutation sigma and
// a vector x.
ColoredGraph translation_graph(const BinaryCode& c);
std::string code_certificate(const BinaryCode& c);
bool codes_equivalent(const BinaryCode& a, const BinaryCode& b);

}  // namespace hadamard
