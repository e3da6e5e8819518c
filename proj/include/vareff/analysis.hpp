#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vareff/adversary.hpp"
#include "vareff/core.hpp"
#include "vareff/engine.hpp"

namespace vareff {

/// h2(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0. Throws Domain
/// outside [0, 1].
double binary_entropy(double p);

/// Detection rates and error rates sorted by attenuator setting.
struct ConditionalStats {
  double R1 = 0.0;
  double R2 = 0.0;
  // Empty when there were no sifted Diagonal detections for that setting.
  std::optional<double> e_obs1;
  std::optional<double> e_obs2;
  std::uint64_t n1 = 0;  // rounds sent with eta1
  std::uint64_t n2 = 0;
  std::uint64_t pe_n1 = 0;
  std::uint64_t pe_n2 = 0;
};

/// Strict: throws NoSamples if either setting was never used and
/// EObsUndefined naming the setting if it has no parameter-estimation pairs.
ConditionalStats conditional_stats(const Tally& tally);

/// Like conditional_stats but leaves e_obs_k empty instead of throwing.
ConditionalStats conditional_stats_partial(const Tally& tally);

/// (eta1 R2 - eta2 R1) / (eta1 - eta2), without the clamp at zero.
double gamma_unclamped(double R1, double R2, double eta1, double eta2);

/// Blinding-rate estimator: max{(eta1 R2 - eta2 R1) / (eta1 - eta2), 0}.
/// For efficiency-independent blinding this equals q p_c f_c exactly.
double gamma(double R1, double R2, double eta1, double eta2);

/// First-order propagation of the binomial standard errors of R1 and R2
/// (sample sizes n1, n2) through the unclamped estimator.
double gamma_sigma(double R1, double R2, double n1, double n2, double eta1, double eta2);

struct PhaseErrorBound {
  double value = 0.0;  // clamped to [0, 1/2]
  double raw = 0.0;
  bool saturated = false;  // raw > 1/2
};

/// gamma / (2 R1) + e_obs1. Throws ZeroDetectionRate if R1 == 0.
PhaseErrorBound phase_error_bound(double gamma, double R1, double e_obs1);

/// 1 - h2(e_ph) - ec_efficiency * h2(e_obs1). May be negative. Both rates
/// must lie in [0, 1/2].
double key_fraction(double e_ph, double e_obs1, double ec_efficiency = 1.0);

/// Closed-form expectations for a strategy with efficiency-independent
/// blinding.
struct AnalyticPrediction {
  double f_c = 0.0;
  double R1 = 0.0;
  double R2 = 0.0;
  double g1 = 0.0;  // P(error | eta_k) = q (1 - p_c) eta_k lambda
  double g2 = 0.0;
  std::optional<double> e_obs1;  // g_k / R_k, empty when R_k == 0
  std::optional<double> e_obs2;
  double gamma = 0.0;
  std::optional<PhaseErrorBound> e_ph;
  std::optional<double> key_fraction;
};

/// Throws UnsupportedModel for efficiency-dependent blinding, for which no
/// closed form exists.
AnalyticPrediction analytic_oracle(const AdversaryStrategy& strategy,
                                   const ValidatedParams& params);

struct Thresholds {
  double z_gamma = 5.0;
};

namespace abort_reason {
inline constexpr unsigned GammaDiscrepancy = 1u << 0;
inline constexpr unsigned NonPositiveKey = 1u << 1;
inline constexpr unsigned InsufficientData = 1u << 2;
}  // namespace abort_reason

struct Decision {
  bool abort = false;
  unsigned reasons = 0;

  bool has(unsigned reason) const { return (reasons & reason) != 0; }
  /// "none", or reason names joined with '|'.
  std::string reason_text() const;
};

struct EstimationReport {
  ConditionalStats stats;
  double gamma = 0.0;
  double gamma_sigma = 0.0;
  std::optional<PhaseErrorBound> e_ph;
  std::optional<double> key_fraction;
  double fc_reference_bound = 0.0;
  double ec_efficiency = 1.0;
  Decision decision;
};

/// Abort rule. GammaDiscrepancy: gamma > z_gamma * gamma_sigma.
/// NonPositiveKey: the key fraction is <= 0 when gamma is replaced by its
/// one-sided upper limit gamma + z_gamma * gamma_sigma (with sigma = 0 this
/// is the plain key_fraction <= 0 test). InsufficientData: e_obs1 or R1
/// unavailable, so no key fraction can be computed.
Decision decide(const EstimationReport& report, const Thresholds& thresholds);

/// Full estimation from counts: rates, gamma and its sigma, phase-error bound,
/// key fraction and the abort decision.
EstimationReport estimate(const Tally& tally, const ValidatedParams& params,
                          const Thresholds& thresholds);

/// Same report built from closed-form rates, with gamma_sigma evaluated at
/// the expected per-setting sample sizes of params.rounds rounds.
EstimationReport estimate_analytic(const AnalyticPrediction& prediction,
                                   const ValidatedParams& params,
                                   const Thresholds& thresholds);

/// Key/value text rendering. Keys, in order: R1, R2, e_obs1, e_obs2, gamma,
/// gamma_sigma, e_ph_bound, e_ph_saturated, key_fraction,
/// fc_reference_bound, abort, abort_reason, n1, n2.
std::string render_report(const EstimationReport& report);

/// 17 significant digits.
std::string format_number(double v);

}  // namespace vareff
