#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hadamard/binary_code.hpp"
#include "hadamard/sign_matrix.hpp"
#include "hadamard/z4_code.hpp"

namespace hadamard {

// Bundled data: $HADAMARD_FIXTURES if set, else the data/ directory of the build.
std::string fixture_dir();
std::string fixture_path(const std::string& relative);

// External matrix library (had.16.1, had.24.8, ...) named by $HADAMARD_DATA.
std::optional<std::string> external_data_dir();
// nullopt when the directory or file is absent
std::optional<SignMatrix> load_external_matrix(const std::string& name);
// Lines made only of + and - (or 1/-1 tokens) form the matrix; anything else is skipped.
SignMatrix parse_loose_matrix(std::string_view text);

// "H12", "H20_1", "H24_2": bordered circulants; "H8", "H16", ...: Sylvester; "K12", "K24_1", ...: bundled files
SignMatrix fixture_matrix(const std::string& name);
// "rm13", "rm14", "rm15" or a matrix name (its Hadamard code)
BinaryCode seed_code(const std::string& name);
// tabled codes by name: "B8,3,1", "B16,7,3", "C24", "D12,2", ...
BinaryCode fixture_binary_code(const std::string& name);
Z4LinearCode fixture_z4(const std::string& file);

// reads a matrix from a path, a bundled name, or an external library name
SignMatrix resolve_matrix(const std::string& spec);

}  // namespace hadamard
