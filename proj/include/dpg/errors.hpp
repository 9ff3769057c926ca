#pragma once

#include <stdexcept>
#include <string>

namespace dpg {

// Malformed input text: unparsable files, wrong field types, format rule breaches.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain (bad parameter range, mismatched
// vertex sets, undefined geometric queries).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Instance exceeds a documented size cap. Raised instead of attempting a
// computation that could silently return a wrong or partial answer.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

} // namespace dpg
