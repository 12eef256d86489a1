#ifndef HNBETTI_ERROR_HPP
#define HNBETTI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hnbetti {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied arguments outside an operation's domain (CLI exit code 2).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// An exact arithmetic precondition failed: non-unit constant term in a series
// inverse, nonzero remainder in an exact division.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// A structural check on a computed result failed (CLI exit code 3). The
// message carries a diagnostic dump of the offending values.
class CheckFailure : public Error {
public:
    using Error::Error;
};

// Persistent cache I/O or content problem.
class CacheError : public Error {
public:
    using Error::Error;
};

}  // namespace hnbetti

#endif  // HNBETTI_ERROR_HPP
