#pragma once

#include <stdexcept>
#include <string>

namespace paving {

// Raised when a request exceeds a configured resource budget (vertex count,
// factorial scan size, census depth). The CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised on domain-invalid input: broken matroid axioms, non-invariant stable
// sets, malformed cycle notation or matroid files. CLI exit code 1.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace paving
