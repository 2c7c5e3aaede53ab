#pragma once

#include <stdexcept>
#include <string>

namespace qhg {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  NotHermitian() : Error("matrix is not Hermitian") {}
};

class StarAbsent : public Error {
 public:
  StarAbsent() : Error("algebra carries no *-structure") {}
};

/// Malformed input document (JSON shape, scalar syntax, labels).
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhg
