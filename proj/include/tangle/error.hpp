#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tangle {

/// Invalid argument to an operation (unknown node, non-permutation order, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation declines to run on this input (e.g. instance too large).
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search ran out of its node budget before it could answer.
class BudgetExhausted : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

/// A documented precondition does not hold. `count` carries the offending
/// quantity when there is one (number of cross-responsible sets for the
/// one-crossing constructor).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::size_t count)
      : std::runtime_error(what), count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

/// A structural lemma failed on an input that satisfied the preconditions.
/// Either the caller lied about uniqueness or there is a bug.
class ConsistencyError : public std::logic_error {
 public:
  ConsistencyError(std::string lemma, const std::string& what)
      : std::logic_error(lemma + ": " + what), lemma_(std::move(lemma)) {}
  const std::string& lemma() const noexcept { return lemma_; }

 private:
  std::string lemma_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed TGL or layout text. Line and column are 1-based; 0 when the
/// problem is not tied to a position.
class ParseError : public std::runtime_error {
 public:
  enum class Code { Syntax, NonBinary, MatchingNotPerfect, DuplicateLabel };

  ParseError(Code code, const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(code, what, line, column)), code_(code), line_(line), column_(column) {}
  Code code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

  static const char* code_name(Code c) {
    switch (c) {
      case Code::Syntax: return "syntax";
      case Code::NonBinary: return "non-binary";
      case Code::MatchingNotPerfect: return "matching-not-perfect";
      case Code::DuplicateLabel: return "duplicate-label";
    }
    return "unknown";
  }

 private:
  static std::string format(Code code, const std::string& what, std::size_t line, std::size_t column) {
    std::string s = std::string(code_name(code)) + " error";
    if (line != 0) s += " at " + std::to_string(line) + ":" + std::to_string(column);
    return s + ": " + what;
  }

  Code code_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tangle
