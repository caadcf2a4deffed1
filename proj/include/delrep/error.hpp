#pragma once

#include <stdexcept>
#include <string>

namespace delrep {

// Thrown for every precondition violation in the library: malformed input,
// arity mismatches, out-of-range positions, enumeration caps, and so on.
// The message is meant for end users of the CLI, so it names the offending
// value rather than the call site.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace delrep
