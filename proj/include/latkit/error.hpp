#pragma once

#include <stdexcept>
#include <string>

namespace latkit {

// Base of every error raised by the library. The CLI maps these onto exit
// code 2 (input errors) or 1 (failed checks).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: non-integer entry where an integer is required, bad file
// syntax, size mismatch.
class InputError : public Error {
 public:
  using Error::Error;
};

// Division by zero, inversion of zero in a field.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Asymmetric or degenerate Gram matrix.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Rows that were supposed to be linearly independent are not.
class RankError : public Error {
 public:
  using Error::Error;
};

// Glue vector with a non-integral pairing, or with odd self-pairing.
class GlueError : public Error {
 public:
  using Error::Error;
};

// Matrix that does not preserve the Gram form.
class IsometryError : public Error {
 public:
  using Error::Error;
};

// Order or closure search exceeded its cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace latkit
