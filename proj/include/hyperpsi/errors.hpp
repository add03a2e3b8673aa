#pragma once

#include <stdexcept>
#include <string>

namespace hyperpsi {

// Argument outside the function's domain: zero denominators, gamma poles,
// nonpositive-integer lower parameters, psi at z <= 0.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A stated precondition of an identity does not hold (e.g. f >= a + b).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested series does not converge at unit argument.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested precision exceeds what an embedded constant can supply.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed rational, series or digamma text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid command-line usage or out-of-range table arguments.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hyperpsi
