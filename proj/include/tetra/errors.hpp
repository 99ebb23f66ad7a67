#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tetra {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. Carries the 0-based offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A valuation was asked for a letter outside its declared letter set.
class UndeclaredLetterError : public Error {
public:
  explicit UndeclaredLetterError(const std::string& letter_name)
      : Error("undeclared letter: " + letter_name), letter_(letter_name) {}

  const std::string& letter() const noexcept { return letter_; }

private:
  std::string letter_;
};

/// Exhaustive enumeration was requested beyond the configured cap.
class CapExceededError : public Error {
public:
  using Error::Error;
};

/// A tuple construction got the wrong number of generators.
class ArityMismatchError : public Error {
public:
  using Error::Error;
};

/// A check was invoked with its stated hypothesis unsatisfied. Reported as an
/// error rather than a false verdict so misuse is not mistaken for a refutation.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The requested connective is not part of the requested semantics.
class ConnectiveNotSupportedError : public Error {
public:
  using Error::Error;
};

/// A quantified formula with free variables was handed to evaluation.
class OpenFormulaError : public Error {
public:
  explicit OpenFormulaError(const std::string& variable)
      : Error("open formula: free variable " + variable), variable_(variable) {}

  const std::string& variable() const noexcept { return variable_; }

private:
  std::string variable_;
};

/// A formula mentions a predicate the model gives no extension for.
class UnknownPredicateError : public Error {
public:
  explicit UnknownPredicateError(const std::string& predicate)
      : Error("unknown predicate: " + predicate), predicate_(predicate) {}

  const std::string& predicate() const noexcept { return predicate_; }

private:
  std::string predicate_;
};

}  // namespace tetra
