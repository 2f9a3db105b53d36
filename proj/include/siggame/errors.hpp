#pragma once

#include <stdexcept>
#include <string>

namespace siggame {

/// Base class for all solver-level failures. Input-validation failures
/// throw std::invalid_argument instead.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Encoder best response is undefined: with K = 0 and lambda = 0 every
/// encoder attains the same cost.
class DegenerateResponse : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A soft-constraint solver was handed a hard-constrained game, or vice versa.
class WrongConstraintMode : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Soft Nash game with lambda = 0: the affine fixed point degenerates.
class UnconstrainedGame : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A required matrix inverse is numerically singular.
class SingularMatrix : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Quantizer decoder response is only derived for a zero-mean decoder prior.
class NonZeroDecoderMean : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Hard-constrained quantizer with level^2 > p_bar.
class PowerViolation : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A perturbation step would produce a non-positive prior standard deviation.
class InvalidPerturbation : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace siggame
