#pragma once

#include <stdexcept>
#include <string>

namespace torsupp {

// Malformed or inconsistent input (files, flags, dimension mismatches).
// The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant that valid inputs cannot violate. Exit code 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace torsupp
