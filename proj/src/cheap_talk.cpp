#include "siggame/cheap_talk.hpp"

namespace siggame::cheap_talk {

PolicyPair fully_informative_equilibrium() {
  return {[](double m) { return m; }, [](double x) { return x; }};
}

PolicyPair babbling_equilibrium(const GaussianPrior& prior_d) {
  const double action = prior_d.mean;
  return {[](double) { return 0.0; }, [action](double) { return action; }};
}

}  // namespace siggame::cheap_talk
