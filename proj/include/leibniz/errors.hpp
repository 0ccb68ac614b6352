#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

// Bad input from the caller: malformed JSON, unknown flag values, size mismatches.
// The CLI maps these to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A family descriptor violates the constraints of its case.
class DescriptorError : public UsageError {
public:
    using UsageError::UsageError;
};

// A basis change or transformation step that is not invertible.
class SingularMapError : public UsageError {
public:
    using UsageError::UsageError;
};

// An operation was called on an algebra that lacks the required property,
// e.g. inner derivations of a tensor that is not Leibniz on that side.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace leibniz
