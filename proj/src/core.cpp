#include "siggame/core.hpp"

#include <cmath>

namespace siggame {

AffineDecoder decoder_best_response(const GameParams& params,
                                    const AffineEncoder& enc) {
  const double sd2 = params.prior_d.variance;
  const double sw2 = params.noise_variance;
  const double den = enc.a * enc.a * sd2 + sw2;
  AffineDecoder dec;
  dec.k = enc.a * sd2 / den;
  dec.l = (sw2 * params.prior_d.mean - enc.a * enc.c * sd2) / den;
  return dec;
}

AffineEncoder encoder_best_response_soft(const AffineDecoder& dec,
                                         double lambda) {
  const double den = dec.k * dec.k + lambda;
  if (den == 0.0) {
    throw DegenerateResponse(
        "encoder best response undefined: K = 0 and lambda = 0");
  }
  return AffineEncoder{dec.k / den, -dec.k * dec.l / den};
}

namespace {

/// E[(m - K(Am + C + w) - L)^2] under m ~ prior, w ~ N(0, noise_variance):
/// with t = 1 - AK the residual is t m - (KC + L) - K w, so the expectation is
/// t^2 var + (t mean - KC - L)^2 + K^2 noise_variance.
double quadratic_cost(const GaussianPrior& prior, double noise_variance,
                      const AffineEncoder& enc, const AffineDecoder& dec) {
  const double t = 1.0 - enc.a * dec.k;
  const double bias = t * prior.mean - (dec.k * enc.c + dec.l);
  return t * t * prior.variance + bias * bias +
         dec.k * dec.k * noise_variance;
}

}  // namespace

double affine_cost_encoder(const GameParams& params, const AffineEncoder& enc,
                           const AffineDecoder& dec) {
  double cost = quadratic_cost(params.prior_e, params.noise_variance, enc, dec);
  if (params.constraint.is_soft()) {
    cost += params.constraint.lambda() * encoder_power(params.prior_e, enc);
  }
  return cost;
}

double affine_cost_decoder(const GameParams& params, const AffineEncoder& enc,
                           const AffineDecoder& dec) {
  return quadratic_cost(params.prior_d, params.noise_variance, enc, dec);
}

double encoder_power(const GaussianPrior& prior, const AffineEncoder& enc) {
  const double shift = enc.a * prior.mean + enc.c;
  return enc.a * enc.a * prior.variance + shift * shift;
}

double w2_gaussian(const GaussianPrior& p, const GaussianPrior& q) {
  return std::hypot(p.mean - q.mean, p.stddev() - q.stddev());
}

}  // namespace siggame
