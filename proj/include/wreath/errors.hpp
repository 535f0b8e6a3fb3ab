#pragma once

#include <stdexcept>

namespace wreath {

// Thrown when a requested enumeration would exceed the configured element
// budget (default 10^7 group elements).
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an exact division or integer extraction fails. These never
// fire on valid inputs; a throw means a bug upstream in a character
// computation.
class ExactnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wreath
