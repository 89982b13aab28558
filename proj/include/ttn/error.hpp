// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ttn {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic between scalars from different field contexts.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation's combinatorial precondition failed (wrong move site,
/// non-annulus strip, open network where a closed one is needed, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or memory budget was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; carries a 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace ttn
