#pragma once

#include <stdexcept>
#include <string>

namespace criticalis {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial, graph, twin vector or cotree text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments failed (unknown vertex, index out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A theorem formula was asked for outside the hypotheses it is proven under.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation hit its configured pair or degree cap. Never a
/// mathematical answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace criticalis
