#pragma once

#include <stdexcept>
#include <string>

namespace cnpd {

// Input violates a documented precondition of a mathematical operation
// (n < 2 for factorize, a_1 = 0 for invert, Re(s) <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A truncation limit was exceeded by an argument.
class TruncationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Structured rejection of user-supplied data. `clause` is a stable
// machine-readable tag; `detail` carries extra data such as the weight deficit.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string clause, const std::string& message, std::string detail = {})
      : std::invalid_argument(message), clause_(std::move(clause)), detail_(std::move(detail)) {}

  const std::string& clause() const noexcept { return clause_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string clause_;
  std::string detail_;
};

}  // namespace cnpd
