#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pebbling {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in a graph spec, configuration string or edge list.
// position is a 0-based character offset into the offending input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class IllegalMove : public Error {
public:
    using Error::Error;
};

// The naive oracle refuses instances above its hard size guard.
class OversizeError : public Error {
public:
    using Error::Error;
};

// Partial knowledge about a pebbling number when a search ran out of budget.
struct SearchBracket {
    long long lower = 0;                 // value is known to be >= lower
    std::optional<long long> upper;      // and <= upper, when a confirm pass finished
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, long long nodes_explored,
                   std::optional<SearchBracket> bracket = std::nullopt)
        : Error(what), nodes_(nodes_explored), bracket_(std::move(bracket)) {}

    long long nodes_explored() const { return nodes_; }
    const std::optional<SearchBracket>& bracket() const { return bracket_; }

private:
    long long nodes_;
    std::optional<SearchBracket> bracket_;
};

} // namespace pebbling
