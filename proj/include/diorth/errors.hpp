#pragma once

#include <stdexcept>
#include <string>

namespace diorth {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An operation was called outside its contract (overlapping sides, vertex
// count above the solver cap, invalid parameter ranges, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A solver exceeded its wall-clock budget. Distinct from infeasibility,
// which cannot occur: every quantity computed here is total.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A checked internal invariant failed. Seeing this means a bug, not bad
// input: the constructive algorithms assert the facts the proofs guarantee.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace diorth
