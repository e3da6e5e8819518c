// vareff: simulate, analyze and sweep BB84 runs with randomized detector
// efficiency.
//
//   vareff simulate --config run.cfg --out run.csv [--seed N] [--rounds N]
//   vareff analyze run.csv --config run.cfg
//   vareff sweep --config run.cfg --param p_c --from 0 --to 1 --steps 11 [--mc]
//
// Exit codes: 0 accept, 1 usage/config error, 2 abort.

#include <iostream>

#include "CLI11.hpp"
#include "vareff/commands.hpp"

namespace {

void add_common(CLI::App* cmd, vareff::cli::CommonOptions& o) {
  cmd->add_option("--config", o.config_path, "Run configuration (key = value)")->required();
  cmd->add_option("--seed", o.seed, "Master seed (overrides config)");
  cmd->add_option("--rounds", o.rounds, "Number of rounds (overrides config)");
  cmd->add_option("--z-gamma", o.z_gamma, "Abort threshold on gamma, in sigmas");
  cmd->add_option("--report", o.report_path, "Also write the report to this file");
  cmd->add_option("--threads", o.workers, "OpenMP worker count (0 = default)");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = vareff::cli;

  CLI::App app{"BB84 with randomized detector efficiency: simulation and analysis"};
  app.require_subcommand(1);

  cli::CommonOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "Run the protocol and report");
  add_common(simulate, sim_opts);
  simulate->add_option("--out", sim_opts.out_path, "Detection record log (CSV)");
  simulate->add_flag("--debug-ground-truth", sim_opts.debug_ground_truth,
                     "Also write <out>.truth.csv with Eve's actions");

  cli::CommonOptions ana_opts;
  std::string log_path;
  auto* analyze = app.add_subcommand("analyze", "Analyze a detection record log");
  add_common(analyze, ana_opts);
  analyze->add_option("log", log_path, "Detection record log")->required();

  cli::CommonOptions sweep_opts;
  cli::SweepSpec spec;
  auto* sweep = app.add_subcommand("sweep", "Tabulate the estimators over a parameter grid");
  add_common(sweep, sweep_opts);
  sweep->add_option("--param", spec.parameter, "q, p_c, lambda, eta2, p_x or p_e")->required();
  sweep->add_option("--from", spec.from, "First grid value")->required();
  sweep->add_option("--to", spec.to, "Last grid value")->required();
  sweep->add_option("--steps", spec.steps, "Number of grid points")->required();
  sweep->add_option("--out", sweep_opts.out_path, "Output table (default stdout)");
  sweep->add_flag("--mc", sweep_opts.mc, "Add Monte Carlo columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitError;
  }

  if (*simulate) return cli::cmd_simulate(sim_opts, std::cout, std::cerr);
  if (*analyze) return cli::cmd_analyze(log_path, ana_opts, std::cout, std::cerr);
  return cli::cmd_sweep(spec, sweep_opts, std::cout, std::cerr);
}
