#pragma once

#include <cmath>

#include "siggame/types.hpp"

namespace siggame::nonlinear {

/// Sign-quantizer encoder x = level * sgn(m), level > 0. sgn(0) = 0 by
/// convention (a measure-zero event with no effect on expectations).
struct QuantizerEncoder {
  double level;

  explicit QuantizerEncoder(double level_);
};

/// Decoder best response to the sign quantizer under a zero-mean decoder
/// prior: y -> amplitude * tanh(slope * y).
struct TanhDecoder {
  double amplitude = 0.0;  // sqrt(2/pi) * sigma_d
  double slope = 0.0;      // level / sigma_W^2

  double operator()(double y) const { return amplitude * std::tanh(slope * y); }
};

/// Throws NonZeroDecoderMean unless mu_d = 0 (the tanh form is derived for a
/// zero-mean decoder prior).
TanhDecoder quantizer_decoder_best_response(const GameParams& params,
                                            const QuantizerEncoder& q);

inline constexpr int kDefaultQuadratureOrder = 201;

/// Encoder cost against the tanh decoder response:
///   E_e[(m - u(x + w))^2] + lambda * level^2   (soft)
///   E_e[(m - u(x + w))^2]                      (hard; requires level^2 <= p_bar)
/// The m-average is exact (the integrand is quadratic in m conditional on
/// sgn(m), so only half-Gaussian moments enter); the w-average uses
/// Gauss-Hermite of the given order. Deterministic for fixed order.
double quantizer_encoder_cost(const GameParams& params,
                              const QuantizerEncoder& q,
                              int order = kDefaultQuadratureOrder);

/// Decoder-prior cost E_d[(m - u(x + w))^2] of the tanh decoder against the
/// quantizer; same quadrature scheme.
double quantizer_decoder_cost(const GameParams& params,
                              const QuantizerEncoder& q,
                              int order = kDefaultQuadratureOrder);

struct ComparisonResult {
  double affine_cost = 0.0;     // encoder cost of the best affine Stackelberg policy
  double quantizer_cost = 0.0;  // encoder cost of the sign quantizer
  bool quantizer_wins = false;
};

/// Best affine Stackelberg encoder cost (matching constraint mode) vs the
/// sign-quantizer cost; quantizer_wins iff quantizer_cost < affine_cost.
ComparisonResult compare_quantizer_vs_affine(const GameParams& params,
                                             const QuantizerEncoder& q,
                                             int order = kDefaultQuadratureOrder);

}  // namespace siggame::nonlinear
