#pragma once

#include <stdexcept>
#include <string>

namespace specincl {

// Root of every exception thrown by the library. Callers that only need to
// distinguish "bad input" from "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Block sizes do not match the matrix they partition.
class PartitionError : public Error {
 public:
  using Error::Error;
};

// Block index or truncation range (n, k) outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Periodised truncations need every block to have the same order.
class PiMethodUnsupported : public Error {
 public:
  using Error::Error;
};

// r(A) = 0: the truncation angle is undefined.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyRegionError : public Error {
 public:
  using Error::Error;
};

// Malformed input file (Matrix Market, CSV, JSON symbol).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A LAPACK or eigensolver routine reported failure.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace specincl
