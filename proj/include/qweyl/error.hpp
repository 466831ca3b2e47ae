#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qweyl {

// Violated precondition or invalid domain input (division by zero,
// mismatched contexts, index out of range, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error while reading an expression or an algebra spec file.
// Positions are 1-based character offsets into the parsed text; for
// multi-line files the message carries the line number as well.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position,
               std::string expected = {})
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace qweyl
