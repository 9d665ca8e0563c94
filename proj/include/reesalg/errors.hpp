#pragma once

#include <stdexcept>
#include <string>

namespace reesalg {

/// Operands live in different ambient dimensions (or a vector has the wrong length).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A criterion's hypotheses are not met for this input (e.g. no d-generated
/// monomial reduction). This is an answer, not a failure.
class Inapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven identity or bound failed to hold on a concrete instance. Always
/// a bug in this library (or a counterexample worth reporting).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration would exceed its configured point budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search found no answer within its verification horizon.
class HorizonExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reesalg
