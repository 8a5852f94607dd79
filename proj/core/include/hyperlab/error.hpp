#pragma once

#include <stdexcept>
#include <string>

namespace hyperlab {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InputError : public Error {
public:
    using Error::Error;
};

/// A computation left the representable range or failed a conditioning check.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace hyperlab
