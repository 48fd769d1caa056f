#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freight {

// Exit-code families used by the command-line front end:
//   InputError  -> 2 (parse, structure, validation of input files)
//   DomainError -> 3 (math preconditions, calibration failures)

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed cell contents. Line and column are 1-based positions in the source text.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : InputError(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed cells arranged into an invalid table (duplicates, gaps, missing cells).
class StructuralError : public InputError {
public:
    using InputError::InputError;
};

/// Values that parse but violate a type invariant (e.g. zero GDP).
class ValidationError : public InputError {
public:
    using InputError::InputError;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class CalibrationError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace freight
