#pragma once

#include <Eigen/Dense>
#include <utility>

#include "siggame/types.hpp"

namespace siggame::nash {

/// Solve the soft affine Nash game. With lambda >= sigma_d^2 / sigma_W^2 the
/// unique affine equilibrium is non-informative; otherwise the informative
/// equilibrium is
///   A = gamma, C = -mu_d gamma, K = gamma sigma_d sqrt(lambda) / sigma_W,
///   L = mu_d,  gamma = +sqrt(sqrt(sigma_W^2/(lambda sigma_d^2)) - sigma_W^2/sigma_d^2).
/// The positive gamma branch is returned. Policies never depend on prior_e.
/// Throws UnconstrainedGame when lambda = 0.
EquilibriumResult solve_soft(const GameParams& params);

/// Closed-form equilibrium costs (encoder, decoder) for the soft Nash game.
std::pair<double, double> soft_costs(const GameParams& params);

struct NashHardSolution {
  EquilibriumResult equilibrium;
  double kkt_multiplier = 0.0;  // nu > 0 at the informative equilibrium
};

/// Solve the hard affine Nash game; an informative equilibrium always exists:
///   A = +sqrt(p_bar / ((mu_e - mu_d)^2 + sigma_e^2)), C = -A mu_d, L = mu_d,
/// K from the decoder best response, nu = |K/A| - K^2. The encoder power
/// E_e[x^2] equals p_bar exactly.
NashHardSolution solve_hard(const GameParams& params);

/// Closed-form equilibrium costs (encoder, decoder) for the hard Nash game.
std::pair<double, double> hard_costs(const GameParams& params);

/// Multidimensional soft Nash game: decoder-side covariance, channel noise
/// covariance (both SPD), and the soft penalty lambda > 0.
struct MatrixGame {
  Eigen::MatrixXd sigma_d;
  Eigen::MatrixXd sigma_w;
  double lambda = 0.0;
  Eigen::Index dimension = 0;

  MatrixGame(Eigen::MatrixXd sigma_d_, Eigen::MatrixXd sigma_w_, double lambda_);
};

/// One sweep of the affine best-response composition: the decoder responds to
/// encoder gain A with F = (A Sigma_d A^T + Sigma_W)^{-1} A Sigma_d, and the
/// encoder replies with (F^T F + lambda I)^{-1} F^T, which reduces to the
/// scalar relation A = K / (K^2 + lambda) for n = 1. Throws SingularMatrix if
/// a required inverse has condition number above 1e12.
Eigen::MatrixXd multidim_best_response(const MatrixGame& game,
                                       const Eigen::MatrixXd& a);

struct FixedPointResult {
  Eigen::MatrixXd a;
  double residual = 0.0;  // ||a - T(a)||_F at return
  bool converged = false;
};

/// Damped fixed-point iteration a <- (1 - damping) a + damping T(a) until the
/// Frobenius residual drops to tol or max_iter is reached. The residual is
/// always reported so non-convergence is detectable.
FixedPointResult multidim_fixed_point(const MatrixGame& game,
                                      const Eigen::MatrixXd& a0, double tol,
                                      int max_iter, double damping = 0.5);

}  // namespace siggame::nash
