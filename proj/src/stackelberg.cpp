#include "siggame/stackelberg.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "siggame/core.hpp"
#include "siggame/oracle.hpp"

namespace siggame::stackelberg {

namespace {

void require_soft(const GameParams& params) {
  if (!params.constraint.is_soft()) {
    throw WrongConstraintMode("soft Stackelberg solver needs a soft power constraint");
  }
}

void require_hard(const GameParams& params) {
  if (!params.constraint.is_hard()) {
    throw WrongConstraintMode("hard Stackelberg solver needs a hard power constraint");
  }
}

double prior_gap_second_moment(const GameParams& params) {
  const double dmu = params.mean_gap();
  return params.prior_e.variance + dmu * dmu;
}

}  // namespace

double soft_objective(const GameParams& params, double a_squared) {
  require_soft(params);
  const double se2 = params.prior_e.variance;
  const double sd2 = params.prior_d.variance;
  const double sw2 = params.noise_variance;
  const double s = prior_gap_second_moment(params);
  const double den = a_squared * sd2 + sw2;
  return sw2 * sw2 * (s - sd2) / (den * den) + sd2 * sw2 / den +
         params.constraint.lambda() * a_squared * se2;
}

double soft_search_upper_bound(const GameParams& params) {
  require_soft(params);
  const double lambda = params.constraint.lambda();
  const double f0 = prior_gap_second_moment(params);
  if (lambda > 0.0) {
    // The channel terms of soft_objective are positive, so the power term
    // alone pushes f above f(0) beyond this point.
    return 2.0 * f0 / (lambda * params.prior_e.variance);
  }
  const double sw2 = params.noise_variance;
  return 100.0 * (sw2 / params.prior_d.variance) * std::max(1.0, f0 / sw2);
}

std::pair<EquilibriumKind, SoftStackelbergDiagnostics> classify_soft(
    const GameParams& params) {
  require_soft(params);
  const double lambda = params.constraint.lambda();
  const double se2 = params.prior_e.variance;
  const double sd2 = params.prior_d.variance;
  const double sw2 = params.noise_variance;
  const double dmu = params.mean_gap();
  const double s = se2 + dmu * dmu;

  SoftStackelbergDiagnostics diag;
  diag.cond_decreasing =
      lambda * se2 * sw2 < sd2 * (2.0 * se2 + 2.0 * dmu * dmu - sd2);
  diag.cond_concave = 3.0 * s < 2.0 * sd2;
  diag.cond_discriminant = 4.0 * lambda * se2 * sw2 * (sd2 - s) <= sd2 * s * s;
  // Discriminant of the quadratic in A^2 solving f(A^2) = f(0); same sign as
  // sd2 s^2 - 4 lambda se2 sw2 (sd2 - s).
  const double sd6 = sd2 * sd2 * sd2;
  diag.discriminant =
      sd6 * (sd2 * s * s + 4.0 * lambda * se2 * sw2 * (s - sd2));
  diag.objective_at_zero = s;

  const bool informative =
      diag.cond_decreasing || (diag.cond_concave && diag.cond_discriminant);
  return {informative ? EquilibriumKind::Informative
                      : EquilibriumKind::NonInformative,
          diag};
}

EquilibriumResult solve_soft(const GameParams& params, double tol,
                             double boundary_rel_tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("solve_soft: tol must be > 0");
  }
  const auto [classified, diag] = classify_soft(params);

  EquilibriumResult result;
  result.kind = EquilibriumKind::NonInformative;
  result.encoder = AffineEncoder{0.0, 0.0};

  if (classified == EquilibriumKind::Informative) {
    const double se2 = params.prior_e.variance;
    const double sd2 = params.prior_d.variance;
    const double sw2 = params.noise_variance;
    const double lambda = params.constraint.lambda();
    const double s = diag.objective_at_zero;

    // Knife edge of the discriminant condition: the informative minimum only
    // ties f(0), so a numeric search may drift to the non-informative side.
    // Report the informative tie point, the double root of the quadratic in
    // A^2 that solves f(A^2) = f(0).
    const bool boundary =
        !diag.cond_decreasing && diag.cond_concave &&
        nearly_equal_rel(4.0 * lambda * se2 * sw2 * (sd2 - s), sd2 * s * s,
                         boundary_rel_tol);
    if (boundary) {
      const double tie_x =
          (sd2 * s - 2.0 * lambda * se2 * sw2) / (2.0 * lambda * se2 * sd2);
      if (tie_x > 0.0) {
        result.kind = EquilibriumKind::BoundaryInformative;
        result.encoder.a = std::sqrt(tie_x);
        result.encoder.c = -result.encoder.a * params.prior_e.mean;
        result.decoder = decoder_best_response(params, result.encoder);
        result.cost_e =
            affine_cost_encoder(params, result.encoder, result.decoder);
        result.cost_d =
            affine_cost_decoder(params, result.encoder, result.decoder);
        return result;
      }
    }

    const double x_max = soft_search_upper_bound(params);
    auto f = [&params](double x) { return soft_objective(params, x); };

    // {0} plus 2047 log-spaced points spanning 16 decades below x_max, then
    // golden-section refinement around the best positive bracket.
    constexpr int kGridSize = 2048;
    std::vector<double> xs(kGridSize);
    xs[0] = 0.0;
    for (int i = 1; i < kGridSize; ++i) {
      const double frac = static_cast<double>(i - 1) / (kGridSize - 2);
      xs[static_cast<std::size_t>(i)] =
          x_max * std::pow(10.0, -16.0 * (1.0 - frac));
    }

    std::size_t best_idx = 1;
    double best_value = f(xs[1]);
    for (std::size_t i = 2; i < xs.size(); ++i) {
      const double value = f(xs[i]);
      if (value < best_value) {
        best_value = value;
        best_idx = i;
      }
    }
    const double lo = xs[best_idx - 1];
    const double hi = xs[std::min(best_idx + 1, xs.size() - 1)];
    oracle::ScalarMinimum best{xs[best_idx], best_value};
    if (lo < hi) {
      const auto refined = oracle::golden_section_min(f, lo, hi, tol);
      if (refined.value < best.value) {
        best = refined;
      }
    }

    if (best.x > 0.0) {
      result.encoder.a = std::sqrt(best.x);
      result.encoder.c = -result.encoder.a * params.prior_e.mean;
      result.kind = EquilibriumKind::Informative;
    }
  }

  result.decoder = decoder_best_response(params, result.encoder);
  result.cost_e = affine_cost_encoder(params, result.encoder, result.decoder);
  result.cost_d = affine_cost_decoder(params, result.encoder, result.decoder);
  return result;
}

EquilibriumKind classify_hard(const GameParams& params,
                              double boundary_rel_tol) {
  require_hard(params);
  const double se2 = params.prior_e.variance;
  const double lhs = se2 / prior_gap_second_moment(params) -
                     2.0 * se2 / params.prior_d.variance;
  const double rhs = params.constraint.p_bar() / params.noise_variance;
  if (nearly_equal_rel(lhs, rhs, boundary_rel_tol)) {
    return EquilibriumKind::BoundaryInformative;
  }
  return lhs < rhs ? EquilibriumKind::Informative
                   : EquilibriumKind::NonInformative;
}

std::pair<double, double> hard_costs(const GameParams& params,
                                     double boundary_rel_tol) {
  const EquilibriumKind kind = classify_hard(params, boundary_rel_tol);
  const double se2 = params.prior_e.variance;
  const double sd2 = params.prior_d.variance;
  const double sw2 = params.noise_variance;
  if (kind == EquilibriumKind::NonInformative) {
    return {prior_gap_second_moment(params), sd2};
  }
  const double p_bar = params.constraint.p_bar();
  const double dmu = params.mean_gap();
  const double den = p_bar * sd2 + se2 * sw2;
  const double cost_e = (p_bar * sd2 * sd2 * se2 * sw2 +
                         sw2 * sw2 * se2 * se2 * (se2 + dmu * dmu)) /
                        (den * den);
  const double cost_d = se2 * sd2 * sw2 / den;
  return {cost_e, cost_d};
}

EquilibriumResult solve_hard(const GameParams& params,
                             double boundary_rel_tol) {
  EquilibriumResult result;
  result.kind = classify_hard(params, boundary_rel_tol);
  if (result.kind != EquilibriumKind::NonInformative) {
    result.encoder.a =
        std::sqrt(params.constraint.p_bar() / params.prior_e.variance);
    result.encoder.c = -result.encoder.a * params.prior_e.mean;
  }
  result.decoder = decoder_best_response(params, result.encoder);
  const auto [cost_e, cost_d] = hard_costs(params, boundary_rel_tol);
  result.cost_e = cost_e;
  result.cost_d = cost_d;
  return result;
}

}  // namespace siggame::stackelberg
