#ifndef MONOCI_ERRORS_HPP
#define MONOCI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoci {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live in different rings.
class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("operands belong to different ring contexts") {}
    explicit ContextMismatch(const std::string& what) : Error(what) {}
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured size bound was exceeded. The computation was abandoned
/// rather than answered approximately.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An internal consistency assertion failed (a bug, never a user error).
class InternalError : public Error {
public:
    using Error::Error;
};

/// Syntax or semantic error in the ideal DSL, with 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
          message_(message), line_(line), column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace monoci

#endif
