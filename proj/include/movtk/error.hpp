#pragma once

#include <stdexcept>
#include <string>

namespace movtk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed .trn / .wts input. The message names the offending cell.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of a library call does not hold (e.g. the alternative is
/// not a winner, k is out of range, weights are not unit).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An edge of a reversal set is not present in the tournament.
class InvalidReversalSet : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An exact search stopped before proving optimality. Never accompanied by a
/// partial answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace movtk
