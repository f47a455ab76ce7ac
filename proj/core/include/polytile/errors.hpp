#pragma once

#include <stdexcept>
#include <string>

namespace polytile {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorKind {
    Syntax,                 // malformed input text
    Validation,             // well-formed input violating a geometric invariant
    WindowTooSmall,         // description admits no finite verification window
    UnsupportedDescription, // tiling description outside the representable family
    InvariantViolation,     // internal consistency failure (should not happen)
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct SyntaxError : Error {
    explicit SyntaxError(const std::string& m) : Error(ErrorKind::Syntax, m) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& m) : Error(ErrorKind::Validation, m) {}
};

struct WindowTooSmallError : Error {
    explicit WindowTooSmallError(const std::string& m) : Error(ErrorKind::WindowTooSmall, m) {}
};

struct UnsupportedDescriptionError : Error {
    explicit UnsupportedDescriptionError(const std::string& m)
        : Error(ErrorKind::UnsupportedDescription, m) {}
};

struct InvariantViolationError : Error {
    explicit InvariantViolationError(const std::string& m)
        : Error(ErrorKind::InvariantViolation, m) {}
};

} // namespace polytile
