#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homspace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An action table breaks one of the two action axioms.
///
/// axiom == 1: act[identity][x] != x (alpha and beta are both the identity).
/// axiom == 2: act[alpha*beta][x] != act[alpha][act[beta][x]].
class AxiomViolation : public Error {
 public:
  AxiomViolation(int axiom, std::size_t alpha, std::size_t beta, std::size_t x);

  int axiom() const noexcept { return axiom_; }
  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t beta() const noexcept { return beta_; }
  std::size_t x() const noexcept { return x_; }

 private:
  int axiom_;
  std::size_t alpha_;
  std::size_t beta_;
  std::size_t x_;
};

/// A construction that needs a single orbit was handed a non-transitive action.
class NotTransitive : public Error {
 public:
  explicit NotTransitive(std::size_t orbit_count);
  std::size_t orbit_count() const noexcept { return orbit_count_; }

 private:
  std::size_t orbit_count_;
};

class NotInvariantMeasure : public Error {
 public:
  NotInvariantMeasure() : Error("measure is not invariant under the action") {}
};

/// The eigen-splitting loop did not reach minimal pieces within the round budget.
class DecompositionStalled : public Error {
 public:
  explicit DecompositionStalled(int max_rounds);
  int max_rounds() const noexcept { return max_rounds_; }

 private:
  int max_rounds_;
};

/// An internal consistency check of the library failed. Never expected.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace homspace
