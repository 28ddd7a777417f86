#pragma once

#include <stdexcept>
#include <string>

namespace thinseq {

/// Bad input: out-of-disc points, index out of range, malformed files.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure: singular systems, eigensolver non-convergence,
/// contraction constants that do not contract.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed sequence or targets file; the message carries the line number.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace thinseq
