#pragma once

#include <stdexcept>
#include <string>

namespace mvhom {

// Error categories; the CLI maps them to exit codes:
//   InputError -> 3, BoundError -> 2, ValidityError -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: unknown points, bad indices, signature mismatches.
struct InputError : Error {
    using Error::Error;
};

// A semantic precondition failed: invalid correspondence, broken cover,
// non-cycle passed to the certifier.
struct ValidityError : Error {
    using Error::Error;
};

// A configured enumeration bound was exceeded.
struct BoundError : Error {
    using Error::Error;
};

} // namespace mvhom
