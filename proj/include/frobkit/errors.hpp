#ifndef FROBKIT_ERRORS_HPP
#define FROBKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad user-facing input: non-prime characteristic, violated precondition.
struct InvalidInputError : Error {
  using Error::Error;
};

/// Operands live in different ambient rings.
struct RingMismatchError : Error {
  using Error::Error;
};

/// An exponent would exceed the ring's configured bound.
struct ExponentOverflowError : Error {
  using Error::Error;
};

/// A configured resource cap (S-pair budget, degree cap) was exceeded.
/// Computations fail loudly instead of returning a wrong answer.
struct ResourceExhaustedError : Error {
  using Error::Error;
};

/// A chain did not stabilize within the configured horizon.
struct UnstabilizedError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace frobkit

#endif
