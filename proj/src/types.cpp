#include "siggame/types.hpp"

#include <cmath>
#include <stdexcept>

namespace siggame {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

}  // namespace

GaussianPrior::GaussianPrior(double mean_, double variance_)
    : mean(mean_), variance(variance_) {
  require_finite(mean, "prior mean");
  require_finite(variance, "prior variance");
  if (!(variance > 0.0)) {
    throw std::invalid_argument("prior variance must be > 0");
  }
}

PowerConstraint PowerConstraint::soft(double lambda) {
  require_finite(lambda, "lambda");
  if (lambda < 0.0) {
    throw std::invalid_argument("soft constraint needs lambda >= 0");
  }
  return PowerConstraint(Mode::Soft, lambda);
}

PowerConstraint PowerConstraint::hard(double p_bar) {
  require_finite(p_bar, "p_bar");
  if (!(p_bar > 0.0)) {
    throw std::invalid_argument("hard constraint needs p_bar > 0");
  }
  return PowerConstraint(Mode::Hard, p_bar);
}

double PowerConstraint::lambda() const {
  if (mode_ != Mode::Soft) {
    throw WrongConstraintMode("lambda() called on a hard power constraint");
  }
  return value_;
}

double PowerConstraint::p_bar() const {
  if (mode_ != Mode::Hard) {
    throw WrongConstraintMode("p_bar() called on a soft power constraint");
  }
  return value_;
}

GameParams::GameParams(GaussianPrior prior_e_, GaussianPrior prior_d_,
                       double noise_variance_, PowerConstraint constraint_)
    : prior_e(prior_e_),
      prior_d(prior_d_),
      noise_variance(noise_variance_),
      constraint(constraint_) {
  require_finite(noise_variance, "noise variance");
  if (!(noise_variance > 0.0)) {
    throw std::invalid_argument("noise variance must be > 0");
  }
}

std::string to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::Informative:
      return "Informative";
    case EquilibriumKind::NonInformative:
      return "NonInformative";
    case EquilibriumKind::BoundaryInformative:
      return "BoundaryInformative";
  }
  return "NonInformative";
}

}  // namespace siggame
