#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Base class for all errors raised by the library.
struct AlgebraError : std::runtime_error {
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live over different variable sets or coefficient domains.
struct DomainMismatch : AlgebraError {
  explicit DomainMismatch(const std::string& what) : AlgebraError(what) {}
};

/// An exact division was requested but the divisor does not divide.
struct InexactDivision : AlgebraError {
  explicit InexactDivision(const std::string& what) : AlgebraError(what) {}
};

/// Evaluation hit a vanishing denominator (singular parameter value).
struct SingularEvaluation : AlgebraError {
  explicit SingularEvaluation(const std::string& what) : AlgebraError(what) {}
};

/// A span that was required to be group-stable is not.
struct NotStable : AlgebraError {
  explicit NotStable(const std::string& what) : AlgebraError(what) {}
};

/// Input to Frobenius machinery is not a (standard) Frobenius algebra.
struct NotFrobenius : AlgebraError {
  explicit NotFrobenius(const std::string& what) : AlgebraError(what) {}
};

}  // namespace dunkl
