#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vareff/config.hpp"

namespace vareff::cli {

inline constexpr int kExitAccept = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAbort = 2;

/// Flags shared by all subcommands; set values override the config file.
struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> rounds;
  std::optional<double> z_gamma;
  std::string out_path;     // simulate: record log; sweep: table
  std::string report_path;  // optional copy of the report
  bool mc = false;
  bool debug_ground_truth = false;
  int workers = 0;
};

struct SweepSpec {
  std::string parameter;
  double from = 0.0;
  double to = 1.0;
  std::size_t steps = 11;
};

/// Parameters a sweep may vary.
const std::vector<std::string>& sweep_parameters();

/// Loads the config and applies flag overrides.
RunConfig resolve_config(const CommonOptions& options);

/// Simulates, writes the record log to out_path (and `<out_path>.truth.csv`
/// with --debug-ground-truth), prints the report. Returns 0 on accept, 2 on
/// abort, 1 on any error.
int cmd_simulate(const CommonOptions& options, std::ostream& out, std::ostream& err);

/// Tallies a record log and prints the report. Protocol parameters come from
/// the config. Same exit-code contract as simulate.
int cmd_analyze(const std::string& log_path, const CommonOptions& options,
                std::ostream& out, std::ostream& err);

/// One row per grid point from the closed forms; with --mc, extra columns
/// from a seeded simulation at each point. Writes to out_path, or `out`
/// when no path is given. Returns 0 or 1.
int cmd_sweep(const SweepSpec& spec, const CommonOptions& options, std::ostream& out,
              std::ostream& err);

/// Sweep grid: `steps` evenly spaced values from `from` to `to` inclusive.
std::vector<double> sweep_grid(const SweepSpec& spec);

}  // namespace vareff::cli
