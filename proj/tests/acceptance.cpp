// Acceptance suite: one pass/fail line per criterion, wall-clock budgets
// included. Returns the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "siggame/cheap_talk.hpp"
#include "siggame/core.hpp"
#include "siggame/nash.hpp"
#include "siggame/nonlinear.hpp"
#include "siggame/oracle.hpp"
#include "siggame/robustness.hpp"
#include "siggame/stackelberg.hpp"
#include "support/helpers.hpp"

using namespace siggame;

namespace {

struct Checker {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& message) {
    if (!ok) {
      problems.push_back(message);
    }
  }

  template <class T>
  void expect_near(T actual, T expected, T tol, const std::string& label) {
    if (!(std::abs(actual - expected) <= tol)) {
      std::ostringstream out;
      out.precision(15);
      out << label << ": got " << actual << ", want " << expected << " +/- "
          << tol;
      problems.push_back(out.str());
    }
  }
};

int g_failures = 0;

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<void(Checker&)>& body) {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.problems.push_back(std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (budget_seconds > 0.0 && elapsed > budget_seconds) {
    std::ostringstream out;
    out << "runtime " << elapsed << " s exceeds budget " << budget_seconds
        << " s";
    check.problems.push_back(out.str());
  }
  if (check.problems.empty()) {
    std::printf("PASS  criterion %2d: %s (%.2f s)\n", id, name.c_str(),
                elapsed);
  } else {
    ++g_failures;
    std::printf("FAIL  criterion %2d: %s (%.2f s)\n", id, name.c_str(),
                elapsed);
    for (const auto& problem : check.problems) {
      std::printf("      - %s\n", problem.c_str());
    }
  }
}

GameParams soft_params(double mu_e, double var_e, double mu_d, double var_d,
                       double noise, double lambda) {
  return GameParams(GaussianPrior(mu_e, var_e), GaussianPrior(mu_d, var_d),
                    noise, PowerConstraint::soft(lambda));
}

GameParams hard_params(double mu_e, double var_e, double mu_d, double var_d,
                       double noise, double p_bar) {
  return GameParams(GaussianPrior(mu_e, var_e), GaussianPrior(mu_d, var_d),
                    noise, PowerConstraint::hard(p_bar));
}

double mc_cost_check(Checker& check, const GameParams& params,
                     const AffineEncoder& enc, const AffineDecoder& dec,
                     const GaussianPrior& prior, double lambda, double closed,
                     std::uint64_t seed, const std::string& label) {
  const auto estimate = oracle::mc_expectation(
      [&](double m, double w) {
        const double u = dec.k * (enc.a * m + enc.c + w) + dec.l;
        const double x = enc.a * m + enc.c;
        return (m - u) * (m - u) + lambda * x * x;
      },
      prior, params.noise_variance, 1'000'000, seed);
  check.expect(std::abs(estimate.mean - closed) <= 3.0 * estimate.std_error,
               label + ": Monte Carlo " + std::to_string(estimate.mean) +
                   " vs closed form " + std::to_string(closed) +
                   " outside 3 standard errors");
  return estimate.mean;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cursor(line);
    std::string cell;
    while (std::getline(cursor, cell, ',')) {
      cells.push_back(cell);
    }
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

int main() {
  criterion(1, "soft counterexample: quantizer beats the best affine policy", 1.0,
            [](Checker& check) {
              const auto params = soft_params(0, 6.25, 0, 0.25, 0.25, 1.5);
              const auto affine = stackelberg::solve_soft(params);
              check.expect_near(affine.encoder.a, 0.30, 0.01, "A*");
              check.expect_near(affine.cost_e, 6.12, 0.01, "affine cost_e");
              const nonlinear::QuantizerEncoder q(std::sqrt(0.5));
              const double quant = nonlinear::quantizer_encoder_cost(params, q);
              check.expect_near(quant, 5.90, 0.02, "quantizer cost");
              const auto duel = nonlinear::compare_quantizer_vs_affine(params, q);
              check.expect(duel.quantizer_wins, "quantizer_wins expected true");
            });

  criterion(2, "hard counterexample: quantizer beats the babbling optimum", 1.0,
            [](Checker& check) {
              const auto params = hard_params(0, 1, 0, 3, 0.4, 0.1);
              check.expect(stackelberg::classify_hard(params) ==
                               EquilibriumKind::NonInformative,
                           "classify_hard should be NonInformative");
              const auto affine = stackelberg::solve_hard(params);
              check.expect(affine.cost_e == 1.0,
                           "non-informative affine cost_e must be exactly 1");
              const nonlinear::QuantizerEncoder q(std::sqrt(0.1));
              const double quant = nonlinear::quantizer_encoder_cost(params, q);
              check.expect_near(quant, 0.94, 0.01, "quantizer cost");
              const auto duel = nonlinear::compare_quantizer_vs_affine(params, q);
              check.expect(duel.quantizer_wins, "quantizer_wins expected true");
            });

  criterion(3, "soft classification flips between lambda = 1 and lambda = 2", 0.0,
            [](Checker& check) {
              const auto high = stackelberg::classify_soft(
                  soft_params(0, 1, 0, 4, 0.25, 2.0));
              check.expect(high.first == EquilibriumKind::NonInformative,
                           "lambda = 2 should be NonInformative");
              const auto low = stackelberg::classify_soft(
                  soft_params(0, 1, 0, 4, 0.25, 1.0));
              check.expect(low.first == EquilibriumKind::Informative,
                           "lambda = 1 should be Informative");
            });

  criterion(4, "closed-form costs vs exact affine costs and Monte Carlo", 30.0,
            [](Checker& check) {
              std::mt19937 rng(404);
              std::uint64_t seed = 44'000;
              for (int i = 0; i < 50; ++i) {
                // Soft mode: Nash soft cost formulas.
                const auto soft = testutil::random_soft_params(rng);
                const double lambda = soft.constraint.lambda();
                const auto nash_soft = nash::solve_soft(soft);
                const auto [se, sd] = nash::soft_costs(soft);
                check.expect_near(se, nash_soft.cost_e,
                                  1e-10 * std::max(1.0, nash_soft.cost_e),
                                  "nash soft cost_e formula");
                check.expect_near(sd, nash_soft.cost_d,
                                  1e-10 * std::max(1.0, nash_soft.cost_d),
                                  "nash soft cost_d formula");
                mc_cost_check(check, soft, nash_soft.encoder, nash_soft.decoder,
                              soft.prior_e, lambda, se, seed++, "nash soft e");
                mc_cost_check(check, soft, nash_soft.encoder, nash_soft.decoder,
                              soft.prior_d, 0.0, sd, seed++, "nash soft d");

                // Hard mode: Stackelberg and Nash hard cost formulas.
                const auto hard = testutil::random_hard_params(rng);
                const auto stack = stackelberg::solve_hard(hard);
                const double stack_e =
                    affine_cost_encoder(hard, stack.encoder, stack.decoder);
                const double stack_d =
                    affine_cost_decoder(hard, stack.encoder, stack.decoder);
                check.expect_near(stack.cost_e, stack_e,
                                  1e-10 * std::max(1.0, stack_e),
                                  "stackelberg hard cost_e formula");
                check.expect_near(stack.cost_d, stack_d,
                                  1e-10 * std::max(1.0, stack_d),
                                  "stackelberg hard cost_d formula");
                mc_cost_check(check, hard, stack.encoder, stack.decoder,
                              hard.prior_e, 0.0, stack.cost_e, seed++,
                              "stackelberg hard e");
                mc_cost_check(check, hard, stack.encoder, stack.decoder,
                              hard.prior_d, 0.0, stack.cost_d, seed++,
                              "stackelberg hard d");

                const auto nash_hard = nash::solve_hard(hard);
                const auto [ne, nd] = nash::hard_costs(hard);
                const auto& eq = nash_hard.equilibrium;
                check.expect_near(ne, eq.cost_e, 1e-10 * std::max(1.0, eq.cost_e),
                                  "nash hard cost_e formula");
                check.expect_near(nd, eq.cost_d, 1e-10 * std::max(1.0, eq.cost_d),
                                  "nash hard cost_d formula");
                mc_cost_check(check, hard, eq.encoder, eq.decoder, hard.prior_e,
                              0.0, ne, seed++, "nash hard e");
                mc_cost_check(check, hard, eq.encoder, eq.decoder, hard.prior_d,
                              0.0, nd, seed++, "nash hard d");
              }
            });

  criterion(5, "Nash fixed-point residuals below 1e-12 on 1000 games", 5.0,
            [](Checker& check) {
              std::mt19937 rng(505);
              for (int i = 0; i < 1000; ++i) {
                const auto soft = testutil::random_soft_params(rng);
                const double lambda = soft.constraint.lambda();
                const double sd2 = soft.prior_d.variance;
                const double sw2 = soft.noise_variance;
                const auto eq = nash::solve_soft(soft);
                const double den_e = eq.decoder.k * eq.decoder.k + lambda;
                const double den_d =
                    eq.encoder.a * eq.encoder.a * sd2 + sw2;
                double residual =
                    std::abs(eq.decoder.k - eq.encoder.a * sd2 / den_d) +
                    std::abs(eq.decoder.l -
                             (sw2 * soft.prior_d.mean -
                              eq.encoder.a * eq.encoder.c * sd2) /
                                 den_d);
                if (den_e > 0.0) {
                  residual += std::abs(eq.encoder.a - eq.decoder.k / den_e) +
                              std::abs(eq.encoder.c +
                                       eq.decoder.k * eq.decoder.l / den_e);
                }
                check.expect(residual < 1e-12, "soft residual " +
                                                   std::to_string(residual));

                const auto hard = testutil::random_hard_params(rng);
                const auto solution = nash::solve_hard(hard);
                const auto& heq = solution.equilibrium;
                check.expect(heq.kind == EquilibriumKind::Informative,
                             "hard equilibrium must be informative");
                check.expect(solution.kkt_multiplier > 0.0,
                             "KKT multiplier must be positive");
                const double nu = solution.kkt_multiplier;
                const double den_h = heq.decoder.k * heq.decoder.k + nu;
                const double hd2 = hard.prior_d.variance;
                const double hw2 = hard.noise_variance;
                const double den_hd =
                    heq.encoder.a * heq.encoder.a * hd2 + hw2;
                const double hard_residual =
                    std::abs(heq.encoder.a - heq.decoder.k / den_h) +
                    std::abs(heq.encoder.c +
                             heq.decoder.k * heq.decoder.l / den_h) +
                    std::abs(heq.decoder.k - heq.encoder.a * hd2 / den_hd) +
                    std::abs(heq.decoder.l - (hw2 * hard.prior_d.mean -
                                              heq.encoder.a * heq.encoder.c *
                                                  hd2) /
                                                 den_hd) +
                    std::abs(encoder_power(hard.prior_e, heq.encoder) -
                             hard.constraint.p_bar());
                check.expect(hard_residual < 1e-12,
                             "hard residual " + std::to_string(hard_residual));
              }
            });

  criterion(6, "500 unilateral deviations never pay; A* beats a dense grid", 60.0,
            [](Checker& check) {
              std::mt19937 rng(606);
              for (int game = 0; game < 15; ++game) {
                const auto soft = testutil::random_soft_params(rng);
                const auto eq = nash::solve_soft(soft);
                for (int trial = 0; trial < 500; ++trial) {
                  const AffineEncoder enc{testutil::uniform(rng, -3, 3),
                                          testutil::uniform(rng, -3, 3)};
                  check.expect(affine_cost_encoder(soft, enc, eq.decoder) >=
                                   eq.cost_e - 1e-9,
                               "soft encoder deviation improved the cost");
                  const AffineDecoder dec{testutil::uniform(rng, -3, 3),
                                          testutil::uniform(rng, -3, 3)};
                  check.expect(affine_cost_decoder(soft, eq.encoder, dec) >=
                                   eq.cost_d - 1e-9,
                               "soft decoder deviation improved the cost");
                }

                const auto hard = testutil::random_hard_params(rng);
                const auto solution = nash::solve_hard(hard);
                const auto& heq = solution.equilibrium;
                const double p_bar = hard.constraint.p_bar();
                const double sigma_e = hard.prior_e.stddev();
                for (int trial = 0; trial < 500; ++trial) {
                  const double angle = testutil::uniform(rng, 0.0, 2.0 * M_PI);
                  const double radius =
                      std::sqrt(testutil::uniform(rng, 0.0, 1.0)) *
                      std::sqrt(p_bar);
                  const double p = radius * std::cos(angle);
                  const double q_val = radius * std::sin(angle);
                  const AffineEncoder enc{
                      p / sigma_e, q_val - p * hard.prior_e.mean / sigma_e};
                  check.expect(affine_cost_encoder(hard, enc, heq.decoder) >=
                                   heq.cost_e - 1e-9,
                               "hard encoder deviation improved the cost");
                  const AffineDecoder dec{testutil::uniform(rng, -3, 3),
                                          testutil::uniform(rng, -3, 3)};
                  check.expect(affine_cost_decoder(hard, heq.encoder, dec) >=
                                   heq.cost_d - 1e-9,
                               "hard decoder deviation improved the cost");
                }
              }

              for (int game = 0; game < 50; ++game) {
                const auto params = testutil::random_soft_params(rng);
                const auto result = stackelberg::solve_soft(params);
                const double attained = stackelberg::soft_objective(
                    params, result.encoder.a * result.encoder.a);
                const double x_max =
                    stackelberg::soft_search_upper_bound(params);
                double grid_best = stackelberg::soft_objective(params, 0.0);
                for (int i = 1; i < 10'000; ++i) {
                  grid_best = std::min(
                      grid_best,
                      stackelberg::soft_objective(params, x_max * i / 9'999.0));
                }
                check.expect(
                    attained <=
                        grid_best + 1e-12 * std::max(1.0, std::abs(grid_best)),
                    "grid point beat the solve_soft optimum");
              }
            });

  criterion(7, "identical priors reproduce the team formulas", 0.0,
            [](Checker& check) {
              std::mt19937 rng(707);
              for (int i = 0; i < 25; ++i) {
                const double mu = testutil::uniform(rng, -1.5, 1.5);
                const double sigma2 = testutil::uniform(rng, 0.4, 3.0);
                const double noise = testutil::uniform(rng, 0.4, 2.0);
                const double p_bar = testutil::uniform(rng, 0.3, 3.0);
                const double hard_team = sigma2 * noise / (p_bar + noise);
                const auto hard = hard_params(mu, sigma2, mu, sigma2, noise, p_bar);
                const auto stack = stackelberg::solve_hard(hard);
                check.expect_near(stack.cost_e, hard_team, 1e-10 * hard_team,
                                  "stackelberg hard team cost");
                const auto [ne, nd] = nash::hard_costs(hard);
                check.expect_near(ne, hard_team, 1e-10 * hard_team,
                                  "nash hard team cost_e");
                check.expect_near(nd, hard_team, 1e-10 * hard_team,
                                  "nash hard team cost_d");

                const double lambda =
                    testutil::uniform(rng, 0.1, 0.9) * sigma2 / noise;
                const double soft_team =
                    2.0 * std::sqrt(lambda * sigma2 * noise) - lambda * noise;
                const auto soft =
                    soft_params(mu, sigma2, mu, sigma2, noise, lambda);
                const auto [se, sd] = nash::soft_costs(soft);
                check.expect_near(se, soft_team, 1e-10 * soft_team,
                                  "nash soft team cost_e");
                check.expect_near(stackelberg::solve_soft(soft).cost_e,
                                  soft_team, 1e-10 * std::max(1.0, soft_team),
                                  "stackelberg soft team cost");

                // Hard informative costs coincide across the two solution
                // concepts once the means agree.
                const auto mixed = hard_params(
                    mu, sigma2, mu, testutil::uniform(rng, 0.4, 3.0), noise,
                    p_bar);
                const auto s2 = stackelberg::solve_hard(mixed);
                if (s2.kind != EquilibriumKind::NonInformative) {
                  const auto [me, md] = nash::hard_costs(mixed);
                  check.expect_near(s2.cost_e, me, 1e-10 * std::max(1.0, me),
                                    "equal-means hard cost_e coincidence");
                  check.expect_near(s2.cost_d, md, 1e-10 * std::max(1.0, md),
                                    "equal-means hard cost_d coincidence");
                }
              }
            });

  criterion(8, "perturbation gap decreases and vanishes near the team setup", 10.0,
            [](Checker& check) {
              std::mt19937 rng(808);
              const std::vector<double> epsilons = {1e-1, 1e-2, 1e-3, 1e-4};
              for (int trial = 0; trial < 20; ++trial) {
                const double sigma = testutil::uniform(rng, 0.55, 1.6);
                const double sigma2 = sigma * sigma;
                const double mu = testutil::uniform(rng, -1.5, 1.5);
                const double noise = testutil::uniform(rng, 0.4, 2.0);
                double d_mean = testutil::uniform(rng, -1.0, 1.0);
                double d_sigma = testutil::uniform(rng, -1.0, 1.0);
                if (std::abs(d_mean) < 0.2) d_mean = std::copysign(0.2, d_mean);
                if (std::abs(d_sigma) < 0.2)
                  d_sigma = std::copysign(0.2, d_sigma);

                const PowerConstraint modes[2] = {
                    PowerConstraint::soft(testutil::uniform(rng, 0.1, 0.45) *
                                          sigma2 / noise),
                    PowerConstraint::hard(testutil::uniform(rng, 0.3, 3.0))};
                for (const auto& constraint : modes) {
                  const GameParams base(GaussianPrior(mu, sigma2),
                                        GaussianPrior(mu, sigma2), noise,
                                        constraint);
                  const double team = robustness::team_cost(
                      GaussianPrior(mu, sigma2), noise, constraint);
                  for (auto target :
                       {robustness::PerturbTarget::PerturbEncoder,
                        robustness::PerturbTarget::PerturbDecoder}) {
                    const robustness::PerturbationSweep sweep(
                        base, {d_mean, d_sigma}, epsilons, target);
                    const auto rows = robustness::run_sweep(sweep);
                    for (std::size_t i = 1; i < rows.size(); ++i) {
                      check.expect(
                          rows[i].gap_to_team < rows[i - 1].gap_to_team,
                          "gap not monotone at eps = " +
                              std::to_string(rows[i].epsilon));
                    }
                    check.expect(rows.back().gap_to_team <
                                     1e-2 * std::max(1.0, team),
                                 "gap(1e-4) too large: " +
                                     std::to_string(rows.back().gap_to_team));
                  }
                }
              }
            });

  criterion(9, "multidimensional fixed points agree with the scalar solver", 0.0,
            [](Checker& check) {
              std::mt19937 rng(909);
              for (int trial = 0; trial < 10; ++trial) {
                const double var_d = testutil::uniform(rng, 0.4, 3.0);
                const double noise = testutil::uniform(rng, 0.4, 2.0);
                const double lambda =
                    testutil::uniform(rng, 0.1, 0.9) * var_d / noise;
                const auto scalar = nash::solve_soft(
                    soft_params(0, 1, 0, var_d, noise, lambda));
                const nash::MatrixGame game(
                    Eigen::MatrixXd::Constant(1, 1, var_d),
                    Eigen::MatrixXd::Constant(1, 1, noise), lambda);
                const auto fixed = nash::multidim_fixed_point(
                    game, Eigen::MatrixXd::Ones(1, 1), 1e-13, 50'000);
                check.expect(fixed.converged, "1-d iteration did not converge");
                check.expect(fixed.residual <= 1e-13,
                             "reported residual above tol");
                check.expect(std::abs(fixed.a(0, 0) - scalar.encoder.a) < 1e-10,
                             "1-d fixed point far from the scalar solution");
              }

              for (int trial = 0; trial < 10; ++trial) {
                Eigen::MatrixXd sigma_d = Eigen::MatrixXd::Zero(2, 2);
                Eigen::MatrixXd sigma_w = Eigen::MatrixXd::Zero(2, 2);
                double var[2], noise[2];
                const double lambda = testutil::uniform(rng, 0.05, 0.4);
                for (int i = 0; i < 2; ++i) {
                  var[i] = testutil::uniform(rng, 0.6, 3.0);
                  // Keep each coordinate informative: lambda < var / noise.
                  noise[i] = testutil::uniform(rng, 0.4, 1.0) * var[i] /
                             (lambda * 4.0);
                  sigma_d(i, i) = var[i];
                  sigma_w(i, i) = noise[i];
                }
                const nash::MatrixGame game(sigma_d, sigma_w, lambda);
                const auto fixed = nash::multidim_fixed_point(
                    game, Eigen::MatrixXd::Identity(2, 2), 1e-12, 50'000);
                check.expect(fixed.converged, "2-d iteration did not converge");
                check.expect(fixed.residual <= 1e-12,
                             "reported residual above tol");
                for (int i = 0; i < 2; ++i) {
                  const auto scalar = nash::solve_soft(
                      soft_params(0, 1, 0, var[i], noise[i], lambda));
                  check.expect(
                      std::abs(fixed.a(i, i) - scalar.encoder.a) < 1e-8,
                      "2-d diagonal entry far from per-coordinate solution");
                }
              }
            });

  criterion(10, "cheap talk: zero-cost revelation and a sturdy babbling pair", 0.0,
             [](Checker& check) {
               const auto pair = cheap_talk::fully_informative_equilibrium();
               auto cost = [&](double m, double) {
                 const double u = pair.decoder(pair.encoder(m));
                 return (m - u) * (m - u);
               };
               const GaussianPrior prior_e(0.4, 1.9);
               const GaussianPrior prior_d(-0.8, 0.7);
               const auto mc_e =
                   oracle::mc_expectation(cost, prior_e, 1.0, 1'000'000, 10);
               const auto mc_d =
                   oracle::mc_expectation(cost, prior_d, 1.0, 1'000'000, 11);
               check.expect(mc_e.mean == 0.0 && mc_e.std_error == 0.0,
                            "encoder-prior cost must be exactly zero");
               check.expect(mc_d.mean == 0.0 && mc_d.std_error == 0.0,
                            "decoder-prior cost must be exactly zero");

               const GaussianPrior babbling_prior(3.0, 2.0);
               const auto babbling =
                   cheap_talk::babbling_equilibrium(babbling_prior);
               check.expect(babbling.decoder(17.0) == 3.0,
                            "babbling decoder must play the prior mean");
               // Decoder cost sigma_d^2, and no affine deviation goes lower.
               std::mt19937 rng(1010);
               for (int trial = 0; trial < 200; ++trial) {
                 const double l = testutil::uniform(rng, -5.0, 10.0);
                 const double deviation =
                     babbling_prior.variance +
                     (babbling_prior.mean - l) * (babbling_prior.mean - l);
                 check.expect(deviation >= babbling_prior.variance,
                              "deviation undercut the babbling cost");
               }
             });

  criterion(11, "CLI sweeps reproduce the numerical-example trends", 2.0,
             [](Checker& check) {
               const std::string cli = SIGGAME_CLI_PATH;
               testutil::write_file(
                   "/tmp/acc_fig_a.cfg",
                   "mu_e = 2\nvar_e = 1\nmu_d = 0\nvar_d = 1\nnoise_var = "
                   "0.01\nconstraint = hard\nconstraint_value = 1\n");
               auto run_a = testutil::run_command(
                   cli +
                   " sweep /tmp/acc_fig_a.cfg --param sigma_d2 --from 1 --to 5 "
                   "--steps 9 --out /tmp/acc_fig_a.csv");
               check.expect(run_a.exit_code == 0, "fig-3a sweep failed");
               const auto rows_a = read_csv("/tmp/acc_fig_a.csv");
               check.expect(rows_a.size() == 10, "fig-3a sweep row count");
               for (std::size_t i = 2; i < rows_a.size(); ++i) {
                 check.expect(std::stod(rows_a[i][3]) < std::stod(rows_a[i - 1][3]),
                              "stackelberg cost_e not decreasing in sigma_d2");
                 check.expect(std::stod(rows_a[i][5]) < std::stod(rows_a[i - 1][5]),
                              "nash cost_e not decreasing in sigma_d2");
                 check.expect(
                     std::abs(std::stod(rows_a[i][3]) - std::stod(rows_a[i][5])) >
                         1e-6,
                     "mismatched means should separate the two equilibria");
               }

               testutil::write_file(
                   "/tmp/acc_fig_b.cfg",
                   "mu_e = 2\nvar_e = 1\nmu_d = 0\nvar_d = 1\nnoise_var = "
                   "0.01\nconstraint = hard\nconstraint_value = 1\n");
               auto run_b = testutil::run_command(
                   cli +
                   " sweep /tmp/acc_fig_b.cfg --param sigma_e2 --from 1 --to 10 "
                   "--steps 10 --out /tmp/acc_fig_b.csv");
               check.expect(run_b.exit_code == 0, "fig-3b sweep failed");
               const auto rows_b = read_csv("/tmp/acc_fig_b.csv");
               for (std::size_t i = 2; i < rows_b.size(); ++i) {
                 check.expect(std::stod(rows_b[i][4]) > std::stod(rows_b[i - 1][4]),
                              "stackelberg cost_d not increasing in sigma_e2");
                 check.expect(std::stod(rows_b[i][6]) > std::stod(rows_b[i - 1][6]),
                              "nash cost_d not increasing in sigma_e2");
               }

               testutil::write_file(
                   "/tmp/acc_fig_eq.cfg",
                   "mu_e = 0\nvar_e = 1\nmu_d = 0\nvar_d = 1\nnoise_var = "
                   "0.01\nconstraint = hard\nconstraint_value = 1\n");
               auto run_eq = testutil::run_command(
                   cli +
                   " sweep /tmp/acc_fig_eq.cfg --param sigma_d2 --from 1 --to 5 "
                   "--steps 9 --out /tmp/acc_fig_eq.csv");
               check.expect(run_eq.exit_code == 0, "equal-means sweep failed");
               const auto rows_eq = read_csv("/tmp/acc_fig_eq.csv");
               for (std::size_t i = 1; i < rows_eq.size(); ++i) {
                 const double se = std::stod(rows_eq[i][3]);
                 const double ne = std::stod(rows_eq[i][5]);
                 check.expect(std::abs(se - ne) <= 1e-10 * std::max(1.0, ne),
                              "equal means should price both equilibria alike");
               }
             });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  }
  return g_failures;
}
