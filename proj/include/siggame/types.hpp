#pragma once

#include <cmath>
#include <string>

#include "siggame/errors.hpp"

namespace siggame {

/// Subjective belief N(mean, variance) one player holds about the source.
struct GaussianPrior {
  double mean = 0.0;
  double variance = 1.0;

  GaussianPrior() = default;
  GaussianPrior(double mean_, double variance_);

  double stddev() const { return std::sqrt(variance); }
};

/// Encoder power handling: either a soft penalty lambda * x^2 appended to the
/// encoder cost, or a hard cap E_e[x^2] <= p_bar.
class PowerConstraint {
 public:
  enum class Mode { Soft, Hard };

  static PowerConstraint soft(double lambda);
  static PowerConstraint hard(double p_bar);

  Mode mode() const { return mode_; }
  bool is_soft() const { return mode_ == Mode::Soft; }
  bool is_hard() const { return mode_ == Mode::Hard; }

  /// Soft penalty weight; throws WrongConstraintMode in hard mode.
  double lambda() const;
  /// Hard power budget; throws WrongConstraintMode in soft mode.
  double p_bar() const;

 private:
  PowerConstraint(Mode mode, double value) : mode_(mode), value_(value) {}

  Mode mode_;
  double value_;
};

/// One full game instance: the two subjective priors, the channel noise
/// variance, and the power-constraint mode.
struct GameParams {
  GaussianPrior prior_e;
  GaussianPrior prior_d;
  double noise_variance;
  PowerConstraint constraint;

  GameParams(GaussianPrior prior_e_, GaussianPrior prior_d_,
             double noise_variance_, PowerConstraint constraint_);

  double mean_gap() const { return prior_e.mean - prior_d.mean; }
};

/// Encoder policy x = a * m + c.
struct AffineEncoder {
  double a = 0.0;
  double c = 0.0;
};

/// Decoder policy u = k * y + l.
struct AffineDecoder {
  double k = 0.0;
  double l = 0.0;
};

enum class EquilibriumKind { Informative, NonInformative, BoundaryInformative };

std::string to_string(EquilibriumKind kind);

struct EquilibriumResult {
  EquilibriumKind kind = EquilibriumKind::NonInformative;
  AffineEncoder encoder;
  AffineDecoder decoder;
  double cost_e = 0.0;
  double cost_d = 0.0;
};

/// Default relative tolerance used by classifiers to detect knife-edge
/// equality of an informativeness condition.
inline constexpr double kDefaultBoundaryRelTol = 1e-12;

/// |a - b| <= rel_tol * max(|a|, |b|); used for boundary detection.
inline bool nearly_equal_rel(double a, double b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace siggame
