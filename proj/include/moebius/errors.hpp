#pragma once

#include <stdexcept>
#include <string>

namespace mg {

// CLI exit codes: 1 precondition, 2 budget, 3 internal cross-check
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};
struct CrossCheckError : std::runtime_error {
    explicit CrossCheckError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace mg
