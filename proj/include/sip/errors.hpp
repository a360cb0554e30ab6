#pragma once

#include <stdexcept>
#include <string>

namespace sip {

// Input text could not be parsed; line is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Structurally valid input that violates a semantic precondition.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what_) : std::runtime_error(what_) {}
};

// A solver ran out of its configured node budget. Never a wrong answer.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what_) : std::runtime_error(what_) {}
};

// An internal guarantee failed; indicates a bug, not bad input.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what_) : std::logic_error(what_) {}
};

}  // namespace sip
