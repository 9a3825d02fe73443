#pragma once

#include <stdexcept>
#include <string>

namespace ncs {

/// Raised when an exact operation is asked for an input outside its domain
/// (zero divisor, degenerate Pythagorean pair, unsupported dimension).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when a computation exceeds its configured time or size budget.
/// `partial` carries a human-readable summary of what was reached.
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string& what, std::string partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const std::string& partial() const noexcept { return partial_; }

private:
  std::string partial_;
};

/// Raised by constructions that are only defined away from the special
/// parameter loci; `factor` names the factor that vanished.
class SpecialCaseError : public std::domain_error {
public:
  SpecialCaseError(const std::string& what, std::string factor)
      : std::domain_error(what), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

private:
  std::string factor_;
};

}  // namespace ncs
