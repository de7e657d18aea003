#pragma once

#include <stdexcept>
#include <string>

namespace knotshake {

// Raised for invalid input or a violated precondition. The message is the
// user-facing text; the CLI maps it to exit code 2.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an internal cross-check fails.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace knotshake
