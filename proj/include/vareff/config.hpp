#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "vareff/adversary.hpp"
#include "vareff/analysis.hpp"
#include "vareff/core.hpp"

namespace vareff {

/// Everything one run needs. Built from a flat `key = value` file; see
/// README for the key list.
///
/// Honest channels (`t`, `e_ch`) are folded into q/p_c/lambda at parse time,
/// so a sweep over q or lambda works for either kind of config.
struct RunConfig {
  ProtocolParams protocol;
  AdversaryStrategy strategy;
  /// Eve's Linear probability. When unset it follows protocol.p_x.
  std::optional<double> p_e;
  /// eta_dependence = proportional: scale_k = eta_k / eta1, recomputed
  /// whenever the etas change.
  bool proportional_scaling = false;
  std::uint64_t seed = 1;
  Thresholds thresholds;

  ValidatedParams params() const { return validate_params(protocol); }
  /// Strategy with p_e and proportional scales resolved, validated.
  AdversaryStrategy resolved_strategy() const;
};

/// Throws Error(Config) with "<source>:<line>: ..." diagnostics.
RunConfig parse_config(std::istream& is, std::string_view source = "config");
RunConfig load_config(const std::string& path);

/// Sets a numeric parameter by name; used by sweeps. Accepts q, p_c, lambda,
/// eta1, eta2, p_x, p_e, p_eta1, f_match, p_double.
void set_parameter(RunConfig& config, std::string_view name, double value);

}  // namespace vareff
