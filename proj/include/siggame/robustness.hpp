#pragma once

#include <vector>

#include "siggame/types.hpp"

namespace siggame::robustness {

/// Jointly optimal (identical-priors) encoder cost:
///   hard: sigma^2 sigma_W^2 / (p_bar + sigma_W^2)
///   soft: 2 sqrt(lambda sigma^2 sigma_W^2) - lambda sigma_W^2
///         when lambda < sigma^2 / sigma_W^2, else sigma^2.
double team_cost(const GaussianPrior& prior, double noise_variance,
                 const PowerConstraint& constraint);

enum class PerturbTarget { PerturbEncoder, PerturbDecoder };

struct PerturbationDirection {
  double d_mean = 0.0;
  double d_sigma = 0.0;  // additive in standard deviation, not variance
};

/// A sequence of shrinking perturbations of one player's prior away from a
/// base game. epsilons must be strictly decreasing and positive.
struct PerturbationSweep {
  GameParams base;
  PerturbationDirection direction;
  std::vector<double> epsilons;
  PerturbTarget which_prior;

  PerturbationSweep(GameParams base_, PerturbationDirection direction_,
                    std::vector<double> epsilons_, PerturbTarget which_prior_);
};

/// Game at perturbation size epsilon: the selected prior becomes
/// N(mean + eps d_mean, (sigma + eps d_sigma)^2). Throws InvalidPerturbation
/// when the perturbed standard deviation is not positive.
GameParams perturbed_params(const PerturbationSweep& sweep, double epsilon);

struct SweepRow {
  double epsilon = 0.0;
  double w2 = 0.0;                 // W2 distance between the perturbed priors
  double stackelberg_cost_e = 0.0;
  double gap_to_team = 0.0;        // |cost_e - team cost at the unperturbed prior|
};

/// Solve the affine Stackelberg game (matching constraint mode) at every
/// epsilon, largest first. The team reference is the unperturbed player's
/// prior. All perturbed games are validated before any are solved.
std::vector<SweepRow> run_sweep(const PerturbationSweep& sweep);

}  // namespace siggame::robustness
