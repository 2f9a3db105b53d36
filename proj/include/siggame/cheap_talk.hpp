#pragma once

#include <functional>

#include "siggame/types.hpp"

namespace siggame::cheap_talk {

/// Deterministic single-stage policy for the noiseless game.
using Policy = std::function<double(double)>;

struct PolicyPair {
  Policy encoder;
  Policy decoder;
};

/// Identity encoder and identity decoder: every message is revealed and acted
/// on exactly, so both players incur zero cost pointwise. Assumes the priors
/// are mutually absolutely continuous, which holds automatically for Gaussian
/// priors with positive variance.
PolicyPair fully_informative_equilibrium();

/// Babbling equilibrium: the encoder sends the constant 0 and the decoder
/// plays its prior mean. Against a constant encoder the decoder best response
/// is mu_d; against a constant decoder every encoder costs the same.
PolicyPair babbling_equilibrium(const GaussianPrior& prior_d);

}  // namespace siggame::cheap_talk
