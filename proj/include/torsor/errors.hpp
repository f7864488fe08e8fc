#pragma once

#include <stdexcept>
#include <string>

namespace torsor {

// Bad arguments, malformed input, division by zero in the coefficient field.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configuration or sample violates general position (or a resampling budget
// ran out while trying to avoid such a degeneracy).
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidInput(msg);
}

inline void require_nondegenerate(bool cond, const std::string& msg) {
    if (!cond) throw DegeneracyError(msg);
}

} // namespace torsor
