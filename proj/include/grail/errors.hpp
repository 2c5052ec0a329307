#ifndef GRAIL_ERRORS_HPP
#define GRAIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grail {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (graph files, set arguments).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A set value was used with a graph it does not belong to.
class OwnershipError : public Error {
public:
    using Error::Error;
};

/// A vertex set failed exact validation (unknown vertex, or not
/// saturated hereditary where that is required).
class InvalidSetError : public Error {
public:
    using Error::Error;
};

/// A requested computation exceeds a configured capacity limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An internal invariant the theory guarantees was violated.  Always a
/// defect, never recoverable input trouble.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace grail

#endif
