#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfpow {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad caller input: degree mismatch, zero vector, malformed element text.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Requested object exceeds the desk-scale caps (group degree, algebra dimension).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// A structure that must satisfy its axioms by construction did not.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

// Exponent search ran past the configured cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace hopfpow
