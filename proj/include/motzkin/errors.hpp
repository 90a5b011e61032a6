#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motzkin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sequence that violates one of the word constraints; `position` is the
/// first offending index.
struct InvalidWord : Error {
    std::size_t position;
    InvalidWord(std::size_t pos, const std::string& reason)
        : Error("invalid word at position " + std::to_string(pos) + ": " + reason),
          position(pos) {}
};

/// Enumeration or length cap exceeded. Caps are configurable; hitting one is
/// an error, never silent truncation.
struct ResourceLimit : Error {
    using Error::Error;
};

struct MalformedPath : Error {
    using Error::Error;
};

struct InvalidCatalanWord : Error {
    using Error::Error;
};

struct NotPrimitive : Error {
    using Error::Error;
};

struct HasFlatStep : Error {
    using Error::Error;
};

struct ContainsUDU : Error {
    using Error::Error;
};

struct NonUnitDivisor : Error {
    using Error::Error;
};

struct NonUnitConstant : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

/// A closed form required exact divisibility (by a power of x or of an aux
/// variable) and the dividend did not vanish as expected. Always a bug in the
/// caller, never a data condition.
struct ShiftResidue : Error {
    using Error::Error;
};

}  // namespace motzkin
