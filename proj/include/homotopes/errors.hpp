#pragma once

#include <stdexcept>
#include <string>

namespace homotopes {

/// A well-formed request that has no answer in the algebra: division by
/// zero, a violated precondition, a singular matrix where an inverse is
/// required, and so on.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

/// Malformed literal or input file.
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string &what)
      : std::invalid_argument(what) {}
};

/// The operation exists but not for this kind of input (e.g. a gcd of
/// multivariate Laurent polynomials).
class UnsupportedOperation : public std::logic_error {
public:
  explicit UnsupportedOperation(const std::string &what)
      : std::logic_error(what) {}
};

} // namespace homotopes
