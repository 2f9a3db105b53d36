#include "siggame/nash.hpp"

#include <cmath>
#include <stdexcept>

#include "siggame/core.hpp"

namespace siggame::nash {

namespace {

void require_soft(const GameParams& params) {
  if (!params.constraint.is_soft()) {
    throw WrongConstraintMode("soft Nash solver needs a soft power constraint");
  }
}

void require_hard(const GameParams& params) {
  if (!params.constraint.is_hard()) {
    throw WrongConstraintMode("hard Nash solver needs a hard power constraint");
  }
}

double positive_lambda(const GameParams& params) {
  const double lambda = params.constraint.lambda();
  if (lambda == 0.0) {
    throw UnconstrainedGame(
        "soft Nash equilibrium is not characterized for lambda = 0");
  }
  return lambda;
}

}  // namespace

EquilibriumResult solve_soft(const GameParams& params) {
  require_soft(params);
  const double lambda = positive_lambda(params);
  const double sd2 = params.prior_d.variance;
  const double sw2 = params.noise_variance;
  const double mu_d = params.prior_d.mean;

  EquilibriumResult result;
  if (lambda >= sd2 / sw2) {
    result.kind = EquilibriumKind::NonInformative;
    result.encoder = AffineEncoder{0.0, 0.0};
    result.decoder = AffineDecoder{0.0, mu_d};
  } else {
    // gamma = +sqrt(sqrt(sw2 / (lambda sd2)) - sw2 / sd2); the positive
    // branch is canonical (sign symmetry holds for the pair).
    const double gamma = std::sqrt(std::sqrt(sw2 / (lambda * sd2)) - sw2 / sd2);
    result.kind = EquilibriumKind::Informative;
    result.encoder = AffineEncoder{gamma, -mu_d * gamma};
    result.decoder =
        AffineDecoder{gamma * std::sqrt(lambda * sd2 / sw2), mu_d};
  }
  result.cost_e = affine_cost_encoder(params, result.encoder, result.decoder);
  result.cost_d = affine_cost_decoder(params, result.encoder, result.decoder);
  return result;
}

std::pair<double, double> soft_costs(const GameParams& params) {
  require_soft(params);
  const double lambda = positive_lambda(params);
  const double sd2 = params.prior_d.variance;
  const double sw2 = params.noise_variance;
  const double dmu = params.mean_gap();
  const double se2 = params.prior_e.variance;
  if (lambda >= sd2 / sw2) {
    return {se2 + dmu * dmu, sd2};
  }
  const double root = std::sqrt(lambda * sd2 * sw2);
  return {root * (se2 + sd2 + dmu * dmu) / sd2 - lambda * sw2, root};
}

NashHardSolution solve_hard(const GameParams& params) {
  require_hard(params);
  const double dmu = params.mean_gap();
  const double s = params.prior_e.variance + dmu * dmu;

  NashHardSolution solution;
  EquilibriumResult& eq = solution.equilibrium;
  eq.kind = EquilibriumKind::Informative;
  eq.encoder.a = std::sqrt(params.constraint.p_bar() / s);
  eq.encoder.c = -eq.encoder.a * params.prior_d.mean;
  eq.decoder = decoder_best_response(params, eq.encoder);
  eq.cost_e = affine_cost_encoder(params, eq.encoder, eq.decoder);
  eq.cost_d = affine_cost_decoder(params, eq.encoder, eq.decoder);
  // Stationarity A = K/(K^2 + nu) holds by construction; nu > 0 because
  // A K < 1 at the decoder best response.
  const double k = eq.decoder.k;
  solution.kkt_multiplier = std::abs(k) / eq.encoder.a - k * k;
  return solution;
}

std::pair<double, double> hard_costs(const GameParams& params) {
  require_hard(params);
  const double p_bar = params.constraint.p_bar();
  const double sd2 = params.prior_d.variance;
  const double sw2 = params.noise_variance;
  const double dmu = params.mean_gap();
  const double s = params.prior_e.variance + dmu * dmu;
  const double den = p_bar * sd2 / s + sw2;
  const double cost_e = (p_bar * sd2 * sd2 / s + s * sw2) * sw2 / (den * den);
  const double cost_d = sd2 * sw2 / den;
  return {cost_e, cost_d};
}

namespace {

constexpr double kMinRcond = 1e-12;

void require_spd(const Eigen::MatrixXd& m, const char* name) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(name) + " must be square");
  }
  const double scale = std::max(1.0, m.norm());
  if ((m - m.transpose()).norm() > 1e-12 * scale) {
    throw std::invalid_argument(std::string(name) + " must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument(std::string(name) + " must be positive definite");
  }
}

}  // namespace

MatrixGame::MatrixGame(Eigen::MatrixXd sigma_d_, Eigen::MatrixXd sigma_w_,
                       double lambda_)
    : sigma_d(std::move(sigma_d_)),
      sigma_w(std::move(sigma_w_)),
      lambda(lambda_),
      dimension(sigma_d.rows()) {
  require_spd(sigma_d, "sigma_d");
  require_spd(sigma_w, "sigma_w");
  if (sigma_w.rows() != dimension) {
    throw std::invalid_argument("sigma_d and sigma_w must have the same size");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be > 0");
  }
}

Eigen::MatrixXd multidim_best_response(const MatrixGame& game,
                                       const Eigen::MatrixXd& a) {
  if (a.rows() != game.dimension || a.cols() != game.dimension) {
    throw std::invalid_argument("encoder matrix has the wrong dimensions");
  }
  const Eigen::MatrixXd cov_y =
      a * game.sigma_d * a.transpose() + game.sigma_w;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_y(cov_y);
  if (lu_y.rcond() < kMinRcond) {
    throw SingularMatrix("output covariance is numerically singular");
  }
  const Eigen::MatrixXd f = lu_y.solve(a * game.sigma_d);
  const Eigen::MatrixXd normal =
      f.transpose() * f +
      game.lambda * Eigen::MatrixXd::Identity(game.dimension, game.dimension);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_n(normal);
  if (lu_n.rcond() < kMinRcond) {
    throw SingularMatrix("encoder normal matrix is numerically singular");
  }
  return lu_n.solve(f.transpose());
}

FixedPointResult multidim_fixed_point(const MatrixGame& game,
                                      const Eigen::MatrixXd& a0, double tol,
                                      int max_iter, double damping) {
  if (!(tol > 0.0) || max_iter < 1) {
    throw std::invalid_argument("multidim_fixed_point: need tol > 0 and max_iter >= 1");
  }
  if (!(damping > 0.0) || damping > 1.0) {
    throw std::invalid_argument("multidim_fixed_point: damping must be in (0, 1]");
  }
  FixedPointResult out;
  out.a = a0;
  Eigen::MatrixXd mapped = multidim_best_response(game, out.a);
  out.residual = (out.a - mapped).norm();
  for (int iter = 0; iter < max_iter && out.residual > tol; ++iter) {
    out.a = (1.0 - damping) * out.a + damping * mapped;
    mapped = multidim_best_response(game, out.a);
    out.residual = (out.a - mapped).norm();
  }
  out.converged = out.residual <= tol;
  return out;
}

}  // namespace siggame::nash
