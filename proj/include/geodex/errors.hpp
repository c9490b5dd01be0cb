#pragma once

#include <stdexcept>
#include <string>

namespace geodex {

/// Malformed graph text or unreadable input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Graph larger than VertexSet::kCapacity.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search hit its state cap or deadline. Never a statement about the value.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertex outside the legal set of a position.
class IllegalMove : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace geodex
