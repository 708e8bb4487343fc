#pragma once

#include <stdexcept>
#include <string>

namespace hadamard {

// A search ran past its node or time budget without an answer.
struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hadamard
