#pragma once

#include <stdexcept>
#include <string>

namespace cosmopoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed multigraph (bad endpoint, isolated vertex, empty edge list).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Operation needs a connected graph (H-representation, dilate counting).
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration passed its configured node cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A maximal obstruction-free point set had the wrong cardinality, or a
/// partial face grew past dim + 1 points.
class ObstructionViolation : public Error {
 public:
  using Error::Error;
};

class StructureViolation : public Error {
 public:
  using Error::Error;
};

class AnchorFailure : public Error {
 public:
  using Error::Error;
};

/// A proven statement failed numerically. Always an implementation bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cosmopoly
