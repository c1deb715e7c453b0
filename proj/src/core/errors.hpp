#pragma once

#include <stdexcept>
#include <string>

namespace deltalink {

/// Malformed textual input (PD codes, polynomials, dataset and certificate files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic failure: non-divisibility, dimension mismatch, bad evaluation point.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Delta-move site that does not match the triangle template.
class SiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A name that does not resolve in the catalog.
class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency check failed; indicates a bug or inconsistent data.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace deltalink
