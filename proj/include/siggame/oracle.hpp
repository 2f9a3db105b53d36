#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "siggame/types.hpp"

namespace siggame::oracle {

/// Abscissae/weights such that sum_i weights[i] * f(nodes[i]) approximates
/// E[f(Z)] for Z ~ N(0, 1). Weights sum to 1; nodes are ascending.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule of the given order (Golub-Welsch), rescaled to the
/// standard normal. Exact for polynomials up to degree 2*order - 1.
QuadratureRule gauss_hermite_rule(int order);

/// Tensor-product Gauss-Hermite approximation of E[f(m, w)] with
/// m ~ prior and w ~ N(0, noise_variance) independent. order >= 2.
template <class F>
double gauss_hermite_expectation(F&& f, const GaussianPrior& prior,
                                 double noise_variance, int order) {
  const QuadratureRule rule = gauss_hermite_rule(order);
  const double sigma_m = prior.stddev();
  const double sigma_w = std::sqrt(noise_variance);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double m = prior.mean + sigma_m * rule.nodes[i];
    double row = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      row += rule.weights[j] * f(m, sigma_w * rule.nodes[j]);
    }
    total += rule.weights[i] * row;
  }
  return total;
}

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Generator behind mc_expectation. splitmix64 is counter-based here: draw i
/// is a pure function of (seed, i), so a sample range can be partitioned
/// deterministically.
inline constexpr std::string_view kMcRngAlgorithm = "splitmix64+box-muller";

namespace detail {

inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform draw in (0, 1] from the top 53 bits (safe under log).
inline double uniform_at(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>((splitmix64_at(seed, index) >> 11) + 1) * 0x1.0p-53;
}

/// Box-Muller pair for sample i, consuming counter slots 2i and 2i+1.
inline std::pair<double, double> normal_pair_at(std::uint64_t seed,
                                                std::uint64_t i) {
  const double u1 = uniform_at(seed, 2 * i);
  const double u2 = uniform_at(seed, 2 * i + 1);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace detail

/// Seeded sample-mean estimate of E[f(m, w)], m ~ prior, w ~ N(0, noise_var).
/// Identical (seed, n_samples) reproduce the estimate bit-for-bit.
template <class F>
McEstimate mc_expectation(F&& f, const GaussianPrior& prior,
                          double noise_variance, std::int64_t n_samples,
                          std::uint64_t seed) {
  if (n_samples < 2) {
    throw std::invalid_argument("mc_expectation: n_samples must be >= 2");
  }
  const double sigma_m = prior.stddev();
  const double sigma_w = std::sqrt(noise_variance);
  double mean = 0.0;
  double m2 = 0.0;  // Welford
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const auto [z1, z2] = detail::normal_pair_at(seed, static_cast<std::uint64_t>(i));
    const double value = f(prior.mean + sigma_m * z1, sigma_w * z2);
    const double delta = value - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (value - mean);
  }
  const double n = static_cast<double>(n_samples);
  McEstimate est;
  est.mean = mean;
  est.std_error = std::sqrt(m2 / (n - 1.0) / n);
  est.n_samples = n_samples;
  est.seed = seed;
  return est;
}

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

namespace detail {

/// Keeps the smallest x among equal minima.
inline void consider(ScalarMinimum& best, double x, double value) {
  if (value < best.value || (value == best.value && x < best.x)) {
    best = {x, value};
  }
}

}  // namespace detail

/// Golden-section refinement on [lo, hi] down to relative tolerance rel_tol.
/// Returns the best point evaluated; ties go to the smaller x.
template <class G>
ScalarMinimum golden_section_min(G&& g, double lo, double hi, double rel_tol) {
  static constexpr double kInvPhi = 0.6180339887498949;
  ScalarMinimum best{lo, g(lo)};
  detail::consider(best, hi, g(hi));
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  detail::consider(best, x1, f1);
  detail::consider(best, x2, f2);
  while (b - a > rel_tol * (std::abs(x1) + std::abs(x2)) &&
         b - a > 1e-300) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = g(x1);
      detail::consider(best, x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = g(x2);
      detail::consider(best, x2, f2);
    }
  }
  return best;
}

/// Coarse linear scan over [lo, hi] followed by golden-section refinement on
/// the bracketing interval. g_star never exceeds the grid minimum; ties are
/// broken toward the smaller x.
template <class G>
ScalarMinimum grid_minimize_1d(G&& g, double lo, double hi, int n_grid,
                               double refine_tol) {
  if (!(lo < hi) || n_grid < 3 || !(refine_tol > 0.0)) {
    throw std::invalid_argument("grid_minimize_1d: need lo < hi, n_grid >= 3, refine_tol > 0");
  }
  std::vector<double> xs(static_cast<std::size_t>(n_grid));
  for (int i = 0; i < n_grid; ++i) {
    xs[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_grid - 1);
  }
  xs.back() = hi;
  ScalarMinimum best{xs[0], g(xs[0])};
  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double value = g(xs[i]);
    if (value < best.value) {
      best = {xs[i], value};
      best_idx = i;
    }
  }
  const double bracket_lo = xs[best_idx == 0 ? 0 : best_idx - 1];
  const double bracket_hi = xs[std::min(best_idx + 1, xs.size() - 1)];
  if (bracket_lo < bracket_hi) {
    const ScalarMinimum refined =
        golden_section_min(g, bracket_lo, bracket_hi, refine_tol);
    detail::consider(best, refined.x, refined.value);
  }
  return best;
}

}  // namespace siggame::oracle
