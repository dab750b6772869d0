#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pe {

/// Invalid argument or precondition violation supplied by the caller.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A search or enumeration exceeded its configured budget. Never a wrong answer.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The splitter strategy did not clear the arena within the depth budget.
class SplitterBudgetError : public ResourceError {
public:
    using ResourceError::ResourceError;
};

/// An internal invariant failed; indicates a bug or an invalid certificate.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pe
