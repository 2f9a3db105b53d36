#include "siggame/robustness.hpp"

#include <cmath>
#include <stdexcept>

#include "siggame/core.hpp"
#include "siggame/stackelberg.hpp"

namespace siggame::robustness {

double team_cost(const GaussianPrior& prior, double noise_variance,
                 const PowerConstraint& constraint) {
  if (!(noise_variance > 0.0)) {
    throw std::invalid_argument("team_cost: noise variance must be > 0");
  }
  const double var = prior.variance;
  if (constraint.is_hard()) {
    return var * noise_variance / (constraint.p_bar() + noise_variance);
  }
  const double lambda = constraint.lambda();
  if (lambda < var / noise_variance) {
    return 2.0 * std::sqrt(lambda * var * noise_variance) -
           lambda * noise_variance;
  }
  return var;
}

PerturbationSweep::PerturbationSweep(GameParams base_,
                                     PerturbationDirection direction_,
                                     std::vector<double> epsilons_,
                                     PerturbTarget which_prior_)
    : base(std::move(base_)),
      direction(direction_),
      epsilons(std::move(epsilons_)),
      which_prior(which_prior_) {
  if (epsilons.empty()) {
    throw std::invalid_argument("perturbation sweep needs at least one epsilon");
  }
  double previous = std::numeric_limits<double>::infinity();
  for (double eps : epsilons) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      throw std::invalid_argument("epsilons must be positive and finite");
    }
    if (!(eps < previous)) {
      throw std::invalid_argument("epsilons must be strictly decreasing");
    }
    previous = eps;
  }
}

GameParams perturbed_params(const PerturbationSweep& sweep, double epsilon) {
  const bool encoder_side = sweep.which_prior == PerturbTarget::PerturbEncoder;
  const GaussianPrior& target =
      encoder_side ? sweep.base.prior_e : sweep.base.prior_d;
  const double mean = target.mean + epsilon * sweep.direction.d_mean;
  const double sigma = target.stddev() + epsilon * sweep.direction.d_sigma;
  if (!(sigma > 0.0)) {
    throw InvalidPerturbation(
        "perturbed prior standard deviation is not positive");
  }
  const GaussianPrior perturbed(mean, sigma * sigma);
  return GameParams(encoder_side ? perturbed : sweep.base.prior_e,
                    encoder_side ? sweep.base.prior_d : perturbed,
                    sweep.base.noise_variance, sweep.base.constraint);
}

std::vector<SweepRow> run_sweep(const PerturbationSweep& sweep) {
  // Validate the whole sweep before solving anything.
  for (double eps : sweep.epsilons) {
    (void)perturbed_params(sweep, eps);
  }
  const GaussianPrior& reference =
      sweep.which_prior == PerturbTarget::PerturbEncoder ? sweep.base.prior_d
                                                         : sweep.base.prior_e;
  const double team =
      team_cost(reference, sweep.base.noise_variance, sweep.base.constraint);

  std::vector<SweepRow> rows;
  rows.reserve(sweep.epsilons.size());
  for (double eps : sweep.epsilons) {
    const GameParams game = perturbed_params(sweep, eps);
    const double cost_e = game.constraint.is_soft()
                              ? stackelberg::solve_soft(game).cost_e
                              : stackelberg::solve_hard(game).cost_e;
    SweepRow row;
    row.epsilon = eps;
    row.w2 = w2_gaussian(game.prior_e, game.prior_d);
    row.stackelberg_cost_e = cost_e;
    row.gap_to_team = std::abs(cost_e - team);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace siggame::robustness
