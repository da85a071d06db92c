#pragma once

#include <stdexcept>
#include <string>

namespace radx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad instance files, bad rational strings, bad arguments.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The instance is outside what the theory or the backends cover
// (characteristic divides n, unsupported field shape, ...).
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

// A configured resource bound was hit (dimension cap, trial-division bound,
// precision ceiling, recombination budget).
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace radx
