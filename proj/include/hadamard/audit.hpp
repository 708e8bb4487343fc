#pragma once

#include <string>
#include <vector>

namespace hadamard {

struct AuditItem {
  std::string table;
  std::string name;
  bool ok = false;
  std::string detail;  // what was compared, or the first mismatch
};

struct AuditReport {
  std::vector<AuditItem> items;
  bool ok() const;
  std::size_t failures() const;
  std::string to_text() const;
};

// Rebuilds every bundled fixture code from its table of vectors and checks
// the listed condition, distances and parameters.
AuditReport verify_fixture_tables();

}  // namespace hadamard
