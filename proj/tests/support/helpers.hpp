#pragma once

// Shared test utilities: deterministic random game generators, an inverse
// normal CDF for the quantile-coupling oracle, and a tiny subprocess runner
// for CLI-level tests.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "siggame/types.hpp"

namespace testutil {

inline double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline siggame::GameParams random_soft_params(std::mt19937& rng) {
  const double var_d = uniform(rng, 0.3, 4.0);
  const double noise = uniform(rng, 0.3, 3.0);
  // lambda spans both sides of the informativeness threshold sd^2 / sw^2.
  const double lambda = uniform(rng, 0.05, 1.5) * var_d / noise;
  return siggame::GameParams(
      siggame::GaussianPrior(uniform(rng, -2.0, 2.0), uniform(rng, 0.3, 4.0)),
      siggame::GaussianPrior(uniform(rng, -2.0, 2.0), var_d), noise,
      siggame::PowerConstraint::soft(lambda));
}

inline siggame::GameParams random_hard_params(std::mt19937& rng) {
  return siggame::GameParams(
      siggame::GaussianPrior(uniform(rng, -2.0, 2.0), uniform(rng, 0.3, 4.0)),
      siggame::GaussianPrior(uniform(rng, -2.0, 2.0), uniform(rng, 0.3, 4.0)),
      uniform(rng, 0.3, 3.0),
      siggame::PowerConstraint::hard(uniform(rng, 0.2, 4.0)));
}

/// Inverse standard normal CDF: Acklam's rational approximation polished with
/// one Halley step, good to ~1e-15 away from the extreme tails.
inline double normal_quantile(double p) {
  static constexpr std::array<double, 6> a = {
      -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr std::array<double, 5> b = {
      -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01};
  static constexpr std::array<double, 6> c = {
      -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00};
  static constexpr std::array<double, 4> d = {
      7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

/// W2 between scalar Gaussians via the quantile coupling
/// integral_0^1 (F_p^{-1}(t) - F_q^{-1}(t))^2 dt, midpoint rule.
inline double w2_quantile_oracle(const siggame::GaussianPrior& p,
                                 const siggame::GaussianPrior& q,
                                 int n = 2'000'000) {
  const double sp = p.stddev();
  const double sq = q.stddev();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) / n;
    const double z = normal_quantile(t);
    const double diff = (p.mean + sp * z) - (q.mean + sq * z);
    acc += diff * diff;
  }
  return std::sqrt(acc / n);
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // captured stdout
};

/// Run a shell command, capturing stdout (stderr goes to a scratch file).
inline CommandResult run_command(const std::string& command) {
  const std::string out_path = "/tmp/siggame_test_stdout.txt";
  const std::string full = command + " > " + out_path + " 2> /tmp/siggame_test_stderr.txt";
  const int status = std::system(full.c_str());
  CommandResult result;
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace testutil
