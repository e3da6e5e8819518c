#include "vareff/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "vareff/analysis.hpp"
#include "vareff/engine.hpp"
#include "vareff/record_log.hpp"

namespace vareff::cli {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::Config, "cannot open '" + path + "' for writing");
  return os;
}

int emit_report(const EstimationReport& report, const CommonOptions& options,
                std::ostream& out) {
  const std::string text = render_report(report);
  out << text;
  if (!options.report_path.empty()) open_output(options.report_path) << text;
  return report.decision.abort ? kExitAbort : kExitAccept;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

const char* bool01(bool b) { return b ? "1" : "0"; }

std::string opt_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("nan");
}

}  // namespace

const std::vector<std::string>& sweep_parameters() {
  static const std::vector<std::string> names{"q", "p_c", "lambda", "eta2", "p_x", "p_e"};
  return names;
}

RunConfig resolve_config(const CommonOptions& options) {
  if (options.config_path.empty()) throw Error(ErrorCode::Config, "--config is required");
  RunConfig c = load_config(options.config_path);
  if (options.seed) c.seed = *options.seed;
  if (options.rounds) c.protocol.rounds = *options.rounds;
  if (options.z_gamma) c.thresholds.z_gamma = *options.z_gamma;
  (void)c.params();
  return c;
}

int cmd_simulate(const CommonOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig config = resolve_config(options);
    const ValidatedParams params = config.params();
    const AdversaryStrategy strategy = config.resolved_strategy();

    const auto records = run_simulation(params, strategy, config.seed, options.workers);

    if (!options.out_path.empty()) {
      auto log = open_output(options.out_path);
      write_record_log(log, records);
      if (options.debug_ground_truth) {
        auto truth = open_output(options.out_path + ".truth.csv");
        write_ground_truth_log(truth, records);
      }
    } else if (options.debug_ground_truth) {
      throw Error(ErrorCode::Config, "--debug-ground-truth needs --out");
    }

    const Tally t = tally(records, options.workers);
    return emit_report(estimate(t, params, config.thresholds), options, out);
  });
}

int cmd_analyze(const std::string& log_path, const CommonOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig config = resolve_config(options);
    const ValidatedParams params = config.params();

    std::ifstream in(log_path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Config, "cannot open record log '" + log_path + "'");
    const auto records = read_record_log(in);

    const Tally t = tally(records, options.workers);
    return emit_report(estimate(t, params, config.thresholds), options, out);
  });
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  std::vector<double> grid;
  grid.reserve(spec.steps);
  if (spec.steps == 1) {
    grid.push_back(spec.from);
    return grid;
  }
  const double step = (spec.to - spec.from) / static_cast<double>(spec.steps - 1);
  for (std::size_t i = 0; i < spec.steps; ++i)
    grid.push_back(i + 1 == spec.steps ? spec.to : spec.from + step * static_cast<double>(i));
  return grid;
}

int cmd_sweep(const SweepSpec& spec, const CommonOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto& allowed = sweep_parameters();
    if (std::find(allowed.begin(), allowed.end(), spec.parameter) == allowed.end())
      throw Error(ErrorCode::Config, "unknown sweep parameter '" + spec.parameter +
                                         "' (expected one of q, p_c, lambda, eta2, p_x, p_e)");
    if (spec.steps == 0) throw Error(ErrorCode::Config, "sweep needs at least one step");

    const RunConfig base = resolve_config(options);

    std::ostringstream table;
    table << spec.parameter << ",R1,R2,gamma,e_ph_bound,key_fraction,abort";
    if (options.mc)
      table << ",mc_R1,mc_R2,mc_gamma,mc_gamma_sigma,mc_e_ph_bound,mc_key_fraction,mc_abort";
    table << '\n';

    for (double value : sweep_grid(spec)) {
      RunConfig config = base;
      set_parameter(config, spec.parameter, value);
      const ValidatedParams params = config.params();
      const AdversaryStrategy strategy = config.resolved_strategy();

      const AnalyticPrediction a = analytic_oracle(strategy, params);
      const EstimationReport r = estimate_analytic(a, params, config.thresholds);
      table << format_number(value) << ',' << format_number(a.R1) << ','
            << format_number(a.R2) << ',' << format_number(a.gamma) << ','
            << opt_number(a.e_ph ? std::optional<double>(a.e_ph->value) : std::nullopt)
            << ',' << opt_number(a.key_fraction) << ',' << bool01(r.decision.abort);

      if (options.mc) {
        const auto records = run_simulation(params, strategy, config.seed, options.workers);
        const EstimationReport m =
            estimate(tally(records, options.workers), params, config.thresholds);
        table << ',' << format_number(m.stats.R1) << ',' << format_number(m.stats.R2) << ','
              << format_number(m.gamma) << ',' << format_number(m.gamma_sigma) << ','
              << opt_number(m.e_ph ? std::optional<double>(m.e_ph->value) : std::nullopt)
              << ',' << opt_number(m.key_fraction) << ',' << bool01(m.decision.abort);
      }
      table << '\n';
    }

    if (options.out_path.empty())
      out << table.str();
    else
      open_output(options.out_path) << table.str();
    return kExitAccept;
  });
}

}  // namespace vareff::cli
