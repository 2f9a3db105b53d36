#pragma once

#include <utility>

#include "siggame/types.hpp"

namespace siggame::stackelberg {

/// Informativeness conditions for the soft-constrained affine Stackelberg
/// game, with S = sigma_e^2 + (mu_e - mu_d)^2:
///   cond_decreasing:   lambda se^2 sw^2 < sd^2 (2 se^2 + 2 dmu^2 - sd^2)
///                      (encoder objective strictly decreasing at A^2 = 0)
///   cond_concave:      3 S < 2 sd^2  (objective concave-then-convex in A^2)
///   cond_discriminant: 4 lambda se^2 sw^2 (sd^2 - S) <= sd^2 S^2
/// discriminant is the discriminant of the quadratic (in A^2) solving
/// f(A^2) = f(0); it is non-negative exactly when cond_discriminant holds.
struct SoftStackelbergDiagnostics {
  bool cond_decreasing = false;
  bool cond_concave = false;
  bool cond_discriminant = false;
  double discriminant = 0.0;
  double objective_at_zero = 0.0;  // f(0) = sigma_e^2 + (mu_e - mu_d)^2
};

/// Encoder objective f(x) at x = A^2 after substituting the decoder best
/// response (soft mode).
double soft_objective(const GameParams& params, double a_squared);

/// Upper end of the search interval for minimizing soft_objective: beyond it
/// the soft power term alone exceeds 2 f(0).
double soft_search_upper_bound(const GameParams& params);

/// Classify the soft affine Stackelberg equilibrium. Informative iff
/// cond_decreasing holds, or it fails and cond_concave and cond_discriminant
/// both hold. Only Informative/NonInformative are produced here.
/// Throws WrongConstraintMode on a hard-constrained game.
std::pair<EquilibriumKind, SoftStackelbergDiagnostics> classify_soft(
    const GameParams& params);

/// Solve the soft affine Stackelberg game by minimizing soft_objective over
/// A^2 >= 0 (log-spaced grid + golden-section refinement to relative
/// tolerance tol). Returns A* >= 0, C* = -A* mu_e, the decoder best response
/// and both exact affine costs. Non-informative games return the canonical
/// A = 0, C = 0. A knife-edge tie between the informative and non-informative
/// minimizers is reported as BoundaryInformative with the informative policy.
EquilibriumResult solve_soft(const GameParams& params, double tol = 1e-12,
                             double boundary_rel_tol = kDefaultBoundaryRelTol);

/// Hard-mode informativeness test:
///   sigma_e^2 / (sigma_e^2 + dmu^2) - 2 sigma_e^2 / sigma_d^2  vs  p_bar / sigma_W^2
/// Strictly below: Informative. Equal within boundary_rel_tol:
/// BoundaryInformative. Above: NonInformative.
EquilibriumKind classify_hard(const GameParams& params,
                              double boundary_rel_tol = kDefaultBoundaryRelTol);

/// Encoder/decoder costs at the hard affine Stackelberg equilibrium
/// (closed forms; non-informative branch returns
/// (sigma_e^2 + dmu^2, sigma_d^2)).
std::pair<double, double> hard_costs(const GameParams& params,
                                     double boundary_rel_tol = kDefaultBoundaryRelTol);

/// Solve the hard affine Stackelberg game: informative policies are
/// A* = sqrt(p_bar / sigma_e^2), C* = -A* mu_e with the decoder best
/// response; costs from hard_costs.
EquilibriumResult solve_hard(const GameParams& params,
                             double boundary_rel_tol = kDefaultBoundaryRelTol);

}  // namespace siggame::stackelberg
