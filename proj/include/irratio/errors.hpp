#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irratio {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration or construction would exceed the caller's element budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// Bad parameters or violated preconditions of a constructor/operation.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace irratio
