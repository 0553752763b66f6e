#pragma once

#include <stdexcept>
#include <string>

namespace orb {

// Bad input: mismatched dimensions, unparsable spec, invalid index.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mathematically impossible request (inverting zero, non-spanning basis).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Group closure did not terminate within the element cap.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem-backed internal consistency check failed.  Any throw of this
// type indicates a bug, never a property of the input.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace orb
