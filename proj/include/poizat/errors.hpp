#pragma once

#include <stdexcept>
#include <string>

namespace poizat {

// Malformed textual input. Carries a 1-based source position when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? what + " at line " + std::to_string(line) + ", column " +
                                             std::to_string(column)
                                       : what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Input is well formed but violates an operation's preconditions.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Arithmetic impossibility: division by zero, inexact division, mixed extensions.
class AlgebraError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace poizat
