// Exception types shared across the library. The CLI maps these to exit codes.
#ifndef TORALG_ERRORS_HPP
#define TORALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toralg {

// Malformed input text. Carries a 1-based line/column of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Well-formed input outside the supported fragment (e.g. non-homogeneous generators).
class unsupported_input_error : public std::runtime_error {
public:
    explicit unsupported_input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Generic reduction ran out of attempts.
class reduction_failure_error : public std::runtime_error {
public:
    explicit reduction_failure_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation exceeded its pair-reduction budget.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; indicates a bug, never user error.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace toralg

#endif
