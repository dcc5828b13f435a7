#pragma once

#include <stdexcept>
#include <string>

namespace sptree {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected input: invalid spec, bad parameter, precondition violation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A numerical routine could not reach its tolerance or detected divergence.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

// A configured enumeration or dimension cap would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace sptree
