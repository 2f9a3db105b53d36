#include "siggame/nonlinear.hpp"

#include <cmath>
#include <stdexcept>

#include "siggame/oracle.hpp"
#include "siggame/stackelberg.hpp"

namespace siggame::nonlinear {

QuantizerEncoder::QuantizerEncoder(double level_) : level(level_) {
  if (!(level > 0.0) || !std::isfinite(level)) {
    throw std::invalid_argument("quantizer level must be > 0 and finite");
  }
}

TanhDecoder quantizer_decoder_best_response(const GameParams& params,
                                            const QuantizerEncoder& q) {
  if (params.prior_d.mean != 0.0) {
    throw NonZeroDecoderMean(
        "quantizer decoder response requires a zero-mean decoder prior");
  }
  return TanhDecoder{std::sqrt(2.0 / M_PI) * params.prior_d.stddev(),
                     q.level / params.noise_variance};
}

namespace {

/// Expected cost E[(m - u)^2] with u = dec(level sgn(m) + w), m ~ prior,
/// w ~ N(0, noise_variance). Conditional on sgn(m) the integrand is quadratic
/// in m, so the m-average reduces to half-Gaussian moments exactly;
/// Gauss-Hermite handles the (analytic) w-average. sgn(0) = 0 only affects a
/// zero-probability event and never enters.
double quantizer_expected_cost(const GaussianPrior& prior,
                               double noise_variance, const TanhDecoder& dec,
                               double level, int order) {
  const auto rule = oracle::gauss_hermite_rule(order);
  const double sigma_w = std::sqrt(noise_variance);
  double mean_plus = 0.0, mean_minus = 0.0, sq_plus = 0.0, sq_minus = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double w = sigma_w * rule.nodes[i];
    const double gp = dec(level + w);
    const double gm = dec(-level + w);
    mean_plus += rule.weights[i] * gp;
    mean_minus += rule.weights[i] * gm;
    sq_plus += rule.weights[i] * gp * gp;
    sq_minus += rule.weights[i] * gm * gm;
  }

  const double mu = prior.mean;
  const double sigma = prior.stddev();
  const double z = mu / sigma;
  const double p_plus = 0.5 * std::erfc(-z / std::sqrt(2.0));
  const double p_minus = 1.0 - p_plus;
  const double density = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
  const double m_plus = mu * p_plus + sigma * density;   // E[m 1{m > 0}]
  const double m_minus = mu - m_plus;                    // E[m 1{m < 0}]

  return (mu * mu + prior.variance) -
         2.0 * (m_plus * mean_plus + m_minus * mean_minus) +
         p_plus * sq_plus + p_minus * sq_minus;
}

}  // namespace

double quantizer_encoder_cost(const GameParams& params,
                              const QuantizerEncoder& q, int order) {
  const TanhDecoder dec = quantizer_decoder_best_response(params, q);
  if (params.constraint.is_hard()) {
    // 1e-12 relative slack so level = sqrt(p_bar) survives rounding.
    const double cap = std::sqrt(params.constraint.p_bar());
    if (q.level > cap * (1.0 + 1e-12)) {
      throw PowerViolation("quantizer level exceeds the hard power budget");
    }
  }
  double cost = quantizer_expected_cost(params.prior_e, params.noise_variance,
                                        dec, q.level, order);
  if (params.constraint.is_soft()) {
    cost += params.constraint.lambda() * q.level * q.level;
  }
  return cost;
}

double quantizer_decoder_cost(const GameParams& params,
                              const QuantizerEncoder& q, int order) {
  const TanhDecoder dec = quantizer_decoder_best_response(params, q);
  return quantizer_expected_cost(params.prior_d, params.noise_variance, dec,
                                 q.level, order);
}

ComparisonResult compare_quantizer_vs_affine(const GameParams& params,
                                             const QuantizerEncoder& q,
                                             int order) {
  ComparisonResult result;
  result.quantizer_cost = quantizer_encoder_cost(params, q, order);
  result.affine_cost = params.constraint.is_soft()
                           ? stackelberg::solve_soft(params).cost_e
                           : stackelberg::solve_hard(params).cost_e;
  result.quantizer_wins = result.quantizer_cost < result.affine_cost;
  return result;
}

}  // namespace siggame::nonlinear
