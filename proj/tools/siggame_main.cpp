// siggame: equilibria of quadratic Gaussian signaling games whose encoder and
// decoder hold mismatched priors. Subcommands: solve, compare, sweep,
// robustness. Exit codes: 0 success, 2 config/usage problem, 3 solver error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "siggame/cheap_talk.hpp"
#include "siggame/core.hpp"
#include "siggame/io.hpp"
#include "siggame/json.hpp"
#include "siggame/nash.hpp"
#include "siggame/nonlinear.hpp"
#include "siggame/robustness.hpp"
#include "siggame/stackelberg.hpp"
#include "siggame/types.hpp"

namespace {

using nlohmann::json;
using namespace siggame;

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

[[noreturn]] void usage_error(const std::string& message) {
  throw io::ConfigError(message);
}

int run_solve(const std::string& config_path, const std::string& solver) {
  const GameParams params = io::load_config(config_path);
  json out;
  out["solver"] = solver;
  if (solver == "stackelberg-soft") {
    out.update(json(stackelberg::solve_soft(params)));
    out["diagnostics"] = stackelberg::classify_soft(params).second;
  } else if (solver == "stackelberg-hard") {
    out.update(json(stackelberg::solve_hard(params)));
  } else if (solver == "nash-soft") {
    out.update(json(nash::solve_soft(params)));
  } else if (solver == "nash-hard") {
    const nash::NashHardSolution solution = nash::solve_hard(params);
    out.update(json(solution.equilibrium));
    out["kkt_multiplier"] = solution.kkt_multiplier;
  } else if (solver == "cheap-talk") {
    const double dmu = params.mean_gap();
    out["kind"] = "Informative";
    out["fully_informative"] = {{"encoder", "identity"},
                                {"decoder", "identity"},
                                {"cost_e", 0.0},
                                {"cost_d", 0.0}};
    out["babbling"] = {{"encoder_constant", 0.0},
                       {"decoder_constant", params.prior_d.mean},
                       {"cost_e", params.prior_e.variance + dmu * dmu},
                       {"cost_d", params.prior_d.variance}};
  } else {
    usage_error("unknown solver '" + solver +
                "'; expected stackelberg-soft|stackelberg-hard|nash-soft|"
                "nash-hard|cheap-talk");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_compare(const std::string& config_path, double level) {
  const GameParams params = io::load_config(config_path);
  const nonlinear::QuantizerEncoder q(level);
  json out = nonlinear::compare_quantizer_vs_affine(params, q);
  out["solver"] = "compare";
  out["level"] = level;
  std::cout << out.dump(2) << "\n";
  return 0;
}

GameParams with_swept_value(const GameParams& base, const std::string& param,
                            double value) {
  GaussianPrior prior_e = base.prior_e;
  GaussianPrior prior_d = base.prior_d;
  double noise_var = base.noise_variance;
  PowerConstraint constraint = base.constraint;
  if (param == "sigma_d2") {
    prior_d = GaussianPrior(prior_d.mean, value);
  } else if (param == "sigma_e2") {
    prior_e = GaussianPrior(prior_e.mean, value);
  } else if (param == "noise_var") {
    noise_var = value;
  } else if (param == "mu_gap") {
    prior_e = GaussianPrior(prior_d.mean + value, prior_e.variance);
  } else if (param == "lambda") {
    if (!constraint.is_soft()) {
      usage_error("sweeping 'lambda' requires a soft-constrained config");
    }
    constraint = PowerConstraint::soft(value);
  } else if (param == "p_bar") {
    if (!constraint.is_hard()) {
      usage_error("sweeping 'p_bar' requires a hard-constrained config");
    }
    constraint = PowerConstraint::hard(value);
  } else {
    usage_error("unknown sweep parameter '" + param +
                "'; expected sigma_d2|sigma_e2|lambda|p_bar|noise_var|mu_gap");
  }
  return GameParams(prior_e, prior_d, noise_var, constraint);
}

int run_sweep(const std::string& config_path, const std::string& param,
              double from, double to, int steps, const std::string& out_path) {
  if (!(from < to)) {
    usage_error("sweep needs --from < --to");
  }
  if (steps < 2) {
    usage_error("sweep needs --steps >= 2");
  }
  const GameParams base = io::load_config(config_path);
  // Solve every row before touching the output file so a mid-sweep solver
  // error cannot leave a partial CSV behind.
  std::ostringstream rows;
  rows << "param,value,stackelberg_kind,stackelberg_cost_e,stackelberg_cost_d,"
          "nash_cost_e,nash_cost_d\n";
  for (int i = 0; i < steps; ++i) {
    const double value =
        from + (to - from) * static_cast<double>(i) / (steps - 1);
    const GameParams game = with_swept_value(base, param, value);
    EquilibriumKind kind;
    double stackelberg_e, stackelberg_d, nash_e, nash_d;
    if (game.constraint.is_hard()) {
      const EquilibriumResult res = stackelberg::solve_hard(game);
      kind = res.kind;
      stackelberg_e = res.cost_e;
      stackelberg_d = res.cost_d;
      std::tie(nash_e, nash_d) = nash::hard_costs(game);
    } else {
      const EquilibriumResult res = stackelberg::solve_soft(game);
      kind = res.kind;
      stackelberg_e = res.cost_e;
      stackelberg_d = res.cost_d;
      std::tie(nash_e, nash_d) = nash::soft_costs(game);
    }
    rows << param << ',' << io::csv_number(value) << ',' << to_string(kind)
         << ',' << io::csv_number(stackelberg_e) << ','
         << io::csv_number(stackelberg_d) << ',' << io::csv_number(nash_e)
         << ',' << io::csv_number(nash_d) << '\n';
  }
  std::ofstream out(out_path);
  if (!out) {
    usage_error("cannot open output file '" + out_path + "'");
  }
  out << rows.str();
  if (!out.good()) {
    usage_error("failed while writing '" + out_path + "'");
  }
  return 0;
}

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& flag) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    try {
      std::size_t used = 0;
      const double value = std::stod(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
      values.push_back(value);
    } catch (const std::exception&) {
      usage_error("bad number '" + item + "' in " + flag);
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return values;
}

int run_robustness(const std::string& config_path, const std::string& direction,
                   const std::string& which, const std::string& eps_list,
                   const std::string& out_path) {
  const GameParams base = io::load_config(config_path);
  const std::vector<double> dir = parse_number_list(direction, "--direction");
  if (dir.size() != 2) {
    usage_error("--direction must be 'd_mean,d_sigma'");
  }
  robustness::PerturbTarget target;
  if (which == "encoder") {
    target = robustness::PerturbTarget::PerturbEncoder;
  } else if (which == "decoder") {
    target = robustness::PerturbTarget::PerturbDecoder;
  } else {
    usage_error("--which must be 'encoder' or 'decoder'");
  }
  const std::vector<double> epsilons = parse_number_list(eps_list, "--eps-list");
  const robustness::PerturbationSweep sweep(
      base, robustness::PerturbationDirection{dir[0], dir[1]}, epsilons,
      target);
  const std::vector<robustness::SweepRow> rows = robustness::run_sweep(sweep);
  const GaussianPrior& reference =
      target == robustness::PerturbTarget::PerturbEncoder ? base.prior_d
                                                          : base.prior_e;
  const double team =
      robustness::team_cost(reference, base.noise_variance, base.constraint);

  std::ofstream out(out_path);
  if (!out) {
    usage_error("cannot open output file '" + out_path + "'");
  }
  out << "epsilon,w2,cost_e,team_cost,gap\n";
  for (const auto& row : rows) {
    out << io::csv_number(row.epsilon) << ',' << io::csv_number(row.w2) << ','
        << io::csv_number(row.stackelberg_cost_e) << ','
        << io::csv_number(team) << ',' << io::csv_number(row.gap_to_team)
        << '\n';
  }
  if (!out.good()) {
    usage_error("failed while writing '" + out_path + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Nash and Stackelberg equilibria of quadratic Gaussian signaling games "
      "with mismatched priors"};
  app.require_subcommand(1);

  std::string config_path;
  std::string solver;
  std::string param;
  std::string out_path;
  std::string which = "encoder";
  std::string direction = "1,0";
  std::string eps_list = "1e-1,1e-2,1e-3,1e-4";
  double level = 0.0;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;

  CLI::App* solve =
      app.add_subcommand("solve", "solve one game; equilibrium JSON on stdout");
  solve->add_option("config", config_path, "game config file")->required();
  solve
      ->add_option("--solver", solver,
                   "stackelberg-soft|stackelberg-hard|nash-soft|nash-hard|"
                   "cheap-talk")
      ->required();

  CLI::App* compare = app.add_subcommand(
      "compare", "sign-quantizer encoder vs best affine policy; JSON on stdout");
  compare->add_option("config", config_path, "game config file")->required();
  compare->add_option("--level", level, "quantizer level sqrt(P)")->required();

  CLI::App* sweep =
      app.add_subcommand("sweep", "linear parameter sweep written as CSV");
  sweep->add_option("config", config_path, "game config file")->required();
  sweep
      ->add_option("--param", param,
                   "sigma_d2|sigma_e2|lambda|p_bar|noise_var|mu_gap")
      ->required();
  sweep->add_option("--from", from, "first swept value")->required();
  sweep->add_option("--to", to, "last swept value")->required();
  sweep->add_option("--steps", steps, "number of rows (>= 2)")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* robust = app.add_subcommand(
      "robustness", "prior-perturbation sweep toward the team setup, as CSV");
  robust->add_option("config", config_path, "game config file")->required();
  robust->add_option("--direction", direction, "perturbation 'd_mean,d_sigma'");
  robust->add_option("--which", which, "perturbed prior: encoder|decoder");
  robust->add_option("--eps-list", eps_list,
                     "strictly decreasing positive epsilons");
  robust->add_option("--out", out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (solve->parsed()) {
      return run_solve(config_path, solver);
    }
    if (compare->parsed()) {
      return run_compare(config_path, level);
    }
    if (sweep->parsed()) {
      return run_sweep(config_path, param, from, to, steps, out_path);
    }
    return run_robustness(config_path, direction, which, eps_list, out_path);
  } catch (const io::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
