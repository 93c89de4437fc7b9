#pragma once

#include <stdexcept>
#include <string>

namespace nilact {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidPermutation : Error {
  using Error::Error;
};

struct ClosureExceedsCap : Error {
  using Error::Error;
};

struct MismatchedParents : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct NotNilpotent : Error {
  using Error::Error;
};

struct NotAutomorphism : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

// A computed fact contradicting a structural guarantee (e.g. a quotient
// action that fails to be trivial). Distinct from ValidationError: user
// input cannot cause it.
struct InternalInvariantViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

/// Tri-state result of a statement checker: a statement with unmet
/// hypotheses is neither confirmed nor falsified.
enum class CheckOutcome { Pass, Fail, NotApplicable };

inline const char* to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::NotApplicable: return "na";
  }
  return "?";
}

}  // namespace nilact
