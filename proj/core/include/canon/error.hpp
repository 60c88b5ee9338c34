#pragma once

#include <stdexcept>
#include <string>

namespace canon {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed external input. Line is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// A configured resource cap was hit; the answer is unknown, not negative.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Precondition violated by the caller.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace canon
