#pragma once

#include <stdexcept>
#include <string>

namespace knotpad {

// Malformed input document or structurally invalid diagram data.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A diagram (or plat closure) that does not have exactly one component.
class NotAKnotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured size cap or search budget was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An invariant oracle disagreed with a pipeline output.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace knotpad
