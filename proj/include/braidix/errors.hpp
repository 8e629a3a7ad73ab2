#pragma once

#include <stdexcept>
#include <string>

namespace braidix {

// Error raised while reading PD text: carries the 1-based source position
// of the offending token so tools can print precise diagnostics.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, int col, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ": " + message),
          line_(line),
          col_(col),
          message_(message) {}

    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    int col_;
    std::string message_;
};

// Error raised when a well-formed request cannot be satisfied for the given
// diagram (unsatisfied precondition, undefined quantity, stale input, ...).
class computation_error : public std::runtime_error {
public:
    explicit computation_error(const std::string& message)
        : std::runtime_error(message) {}
};

// Error raised when an internal structural invariant fails.  Seeing one of
// these means a bug in this library, not bad user input.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& message)
        : std::logic_error(message) {}
};

}  // namespace braidix
