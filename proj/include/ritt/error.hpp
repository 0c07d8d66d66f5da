#ifndef RITT_ERROR_HPP
#define RITT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ritt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (zero polynomial, mismatched ambient, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured resource bound (degree cap, height cap, ...) was exceeded.
/// Raised instead of returning a possibly wrong answer.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Syntax error while parsing an expression. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace ritt

#endif // RITT_ERROR_HPP
