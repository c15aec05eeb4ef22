#pragma once

#include <stdexcept>
#include <string>

namespace entmon {

// Shape/dimension mismatches between operands.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An input violates a documented precondition (non-Hermitian where Hermitian
// is required, non-state where a state is required, ...).
struct contract_violation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace entmon
