#ifndef GAMMALAB_ERRORS_HPP
#define GAMMALAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gammalab {

/// Operation outside its mathematical domain (inverting zero, bad rank, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Laurent computation needed more coefficients than the precision window holds.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query fell outside the part of the explored ball where results are certified.
class RegionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural law that must hold in the building or the algebra was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or inconsistent user input (module files, configs).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gammalab

#endif  // GAMMALAB_ERRORS_HPP
