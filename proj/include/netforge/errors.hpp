#pragma once

#include <stdexcept>
#include <string>

namespace netforge {

// Bad arguments or malformed values (wrong sizes, out-of-range digits, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exact integer quantity does not fit the supported width.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A scripted greedy choice was not available at its step.
class InvalidChoice : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed interchange file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace netforge
