#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcover {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Board side out of range for the requested operation.
class InvalidBoard : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (off-board square, q < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Internal loss of an attacking configuration grows with the board.
class UnboundedLoss : public Error {
 public:
  using Error::Error;
};

// The loss/cover identity only holds once all line crossings are on board.
class NotStable : public Error {
 public:
  using Error::Error;
};

class DoesNotFit : public Error {
 public:
  using Error::Error;
};

// Search refused or aborted because its cost exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// A checked invariant failed at runtime. Always a bug or corrupt data.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ValidationError : public Error {
 public:
  ValidationError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class UnsupportedVersion : public Error {
 public:
  using Error::Error;
};

}  // namespace qcover
