#pragma once

#include "siggame/types.hpp"

namespace siggame {

/// Conditional-mean decoder u = K y + L against the affine encoder, under the
/// decoder's own prior:
///   K = A sigma_d^2 / (A^2 sigma_d^2 + sigma_W^2)
///   L = (sigma_W^2 mu_d - A C sigma_d^2) / (A^2 sigma_d^2 + sigma_W^2)
AffineDecoder decoder_best_response(const GameParams& params,
                                    const AffineEncoder& enc);

/// Pointwise-optimal soft-penalized encoder against the affine decoder:
///   A = K / (K^2 + lambda), C = -K L / (K^2 + lambda).
/// Throws DegenerateResponse when K = 0 and lambda = 0 (every encoder is
/// equally good; returning an arbitrary policy would corrupt fixed-point
/// iteration).
AffineEncoder encoder_best_response_soft(const AffineDecoder& dec,
                                         double lambda);

/// Exact expected encoder cost under prior_e:
///   E_e[(m - K(Am + C + w) - L)^2]  (+ lambda E_e[(Am + C)^2] in soft mode).
double affine_cost_encoder(const GameParams& params, const AffineEncoder& enc,
                           const AffineDecoder& dec);

/// Exact expected decoder cost E_d[(m - K(Am + C + w) - L)^2] under prior_d.
double affine_cost_decoder(const GameParams& params, const AffineEncoder& enc,
                           const AffineDecoder& dec);

/// Transmit power of the affine encoder under the given prior:
/// E[(a m + c)^2] = a^2 var + (a mean + c)^2.
double encoder_power(const GaussianPrior& prior, const AffineEncoder& enc);

/// Order-2 Wasserstein distance between scalar Gaussians:
/// sqrt((mu_p - mu_q)^2 + (sigma_p - sigma_q)^2).
double w2_gaussian(const GaussianPrior& p, const GaussianPrior& q);

}  // namespace siggame
