#include "vareff/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vareff {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::Domain, "binary entropy argument must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

ConditionalStats conditional_stats_partial(const Tally& tally) {
  const EtaCell& c1 = tally[EtaIndex::One];
  const EtaCell& c2 = tally[EtaIndex::Two];
  if (c1.sent == 0 || c2.sent == 0)
    throw Error(ErrorCode::NoSamples, c1.sent == 0 ? "no rounds were sent with eta1"
                                                   : "no rounds were sent with eta2");
  ConditionalStats s;
  s.n1 = c1.sent;
  s.n2 = c2.sent;
  s.R1 = static_cast<double>(c1.detected) / static_cast<double>(c1.sent);
  s.R2 = static_cast<double>(c2.detected) / static_cast<double>(c2.sent);
  s.pe_n1 = c1.pe_count;
  s.pe_n2 = c2.pe_count;
  if (c1.pe_count > 0)
    s.e_obs1 = static_cast<double>(c1.pe_errors) / static_cast<double>(c1.pe_count);
  if (c2.pe_count > 0)
    s.e_obs2 = static_cast<double>(c2.pe_errors) / static_cast<double>(c2.pe_count);
  return s;
}

ConditionalStats conditional_stats(const Tally& tally) {
  ConditionalStats s = conditional_stats_partial(tally);
  if (!s.e_obs1)
    throw Error(ErrorCode::EObsUndefined, "e_obs1 undefined: no parameter-estimation pairs for eta1");
  if (!s.e_obs2)
    throw Error(ErrorCode::EObsUndefined, "e_obs2 undefined: no parameter-estimation pairs for eta2");
  return s;
}

namespace {

void require_eta_order(double eta1, double eta2) {
  if (!(eta1 > eta2)) throw Error(ErrorCode::EtaOrdering, "gamma requires eta1 > eta2");
}

}  // namespace

double gamma_unclamped(double R1, double R2, double eta1, double eta2) {
  require_eta_order(eta1, eta2);
  return (eta1 * R2 - eta2 * R1) / (eta1 - eta2);
}

double gamma(double R1, double R2, double eta1, double eta2) {
  return std::max(gamma_unclamped(R1, R2, eta1, eta2), 0.0);
}

double gamma_sigma(double R1, double R2, double n1, double n2, double eta1, double eta2) {
  require_eta_order(eta1, eta2);
  const double var1 = n1 > 0.0 ? R1 * (1.0 - R1) / n1 : 0.0;
  const double var2 = n2 > 0.0 ? R2 * (1.0 - R2) / n2 : 0.0;
  return std::sqrt(eta1 * eta1 * var2 + eta2 * eta2 * var1) / (eta1 - eta2);
}

PhaseErrorBound phase_error_bound(double gamma, double R1, double e_obs1) {
  if (!(R1 > 0.0)) throw Error(ErrorCode::ZeroDetectionRate, "phase-error bound needs R1 > 0");
  PhaseErrorBound b;
  b.raw = gamma / (2.0 * R1) + e_obs1;
  b.saturated = b.raw > 0.5;
  b.value = std::clamp(b.raw, 0.0, 0.5);
  return b;
}

double key_fraction(double e_ph, double e_obs1, double ec_efficiency) {
  if (!(e_ph >= 0.0 && e_ph <= 0.5) || !(e_obs1 >= 0.0 && e_obs1 <= 0.5))
    throw Error(ErrorCode::Domain, "key fraction rates must lie in [0, 1/2]");
  return 1.0 - binary_entropy(e_ph) - ec_efficiency * binary_entropy(e_obs1);
}

AnalyticPrediction analytic_oracle(const AdversaryStrategy& strategy,
                                   const ValidatedParams& params) {
  if (strategy.blinding.dependence != EtaDependence::Independent)
    throw Error(ErrorCode::UnsupportedModel,
                "no closed form for efficiency-dependent blinding");
  validate_strategy(strategy);

  const double q = strategy.q;
  const double p_c = strategy.p_c;
  const double lambda = strategy.quantum.lambda;

  AnalyticPrediction a;
  a.f_c = effective_fc(strategy, params, EtaIndex::One);
  a.R1 = q * p_c * a.f_c + q * (1.0 - p_c) * params->eta1;
  a.R2 = q * p_c * a.f_c + q * (1.0 - p_c) * params->eta2;
  a.g1 = q * (1.0 - p_c) * params->eta1 * lambda;
  a.g2 = q * (1.0 - p_c) * params->eta2 * lambda;
  if (a.R1 > 0.0) a.e_obs1 = a.g1 / a.R1;
  if (a.R2 > 0.0) a.e_obs2 = a.g2 / a.R2;
  a.gamma = gamma(a.R1, a.R2, params->eta1, params->eta2);
  if (a.e_obs1) {
    a.e_ph = phase_error_bound(a.gamma, a.R1, *a.e_obs1);
    a.key_fraction =
        key_fraction(a.e_ph->value, std::min(*a.e_obs1, 0.5), params->ec_efficiency);
  }
  return a;
}

std::string Decision::reason_text() const {
  if (reasons == 0) return "none";
  std::string s;
  const auto append = [&](unsigned bit, const char* name) {
    if (!has(bit)) return;
    if (!s.empty()) s += '|';
    s += name;
  };
  append(abort_reason::GammaDiscrepancy, "GammaDiscrepancy");
  append(abort_reason::NonPositiveKey, "NonPositiveKey");
  append(abort_reason::InsufficientData, "InsufficientData");
  return s;
}

Decision decide(const EstimationReport& report, const Thresholds& thresholds) {
  Decision d;
  const double margin = thresholds.z_gamma * report.gamma_sigma;
  if (report.gamma > margin) d.reasons |= abort_reason::GammaDiscrepancy;

  if (!report.key_fraction || !report.stats.e_obs1 || !(report.stats.R1 > 0.0)) {
    d.reasons |= abort_reason::InsufficientData;
  } else {
    const PhaseErrorBound upper =
        phase_error_bound(report.gamma + margin, report.stats.R1, *report.stats.e_obs1);
    const double conservative = key_fraction(
        upper.value, std::min(*report.stats.e_obs1, 0.5), report.ec_efficiency);
    if (*report.key_fraction <= 0.0 || conservative <= 0.0)
      d.reasons |= abort_reason::NonPositiveKey;
  }
  d.abort = d.reasons != 0;
  return d;
}

namespace {

void fill_key(EstimationReport& r) {
  if (!r.stats.e_obs1 || !(r.stats.R1 > 0.0)) return;
  r.e_ph = phase_error_bound(r.gamma, r.stats.R1, *r.stats.e_obs1);
  r.key_fraction =
      key_fraction(r.e_ph->value, std::min(*r.stats.e_obs1, 0.5), r.ec_efficiency);
}

}  // namespace

EstimationReport estimate(const Tally& tally, const ValidatedParams& params,
                          const Thresholds& thresholds) {
  EstimationReport r;
  r.stats = conditional_stats_partial(tally);
  r.gamma = gamma(r.stats.R1, r.stats.R2, params->eta1, params->eta2);
  r.gamma_sigma =
      gamma_sigma(r.stats.R1, r.stats.R2, static_cast<double>(r.stats.n1),
                  static_cast<double>(r.stats.n2), params->eta1, params->eta2);
  r.fc_reference_bound = fc_reference_bound(params);
  r.ec_efficiency = params->ec_efficiency;
  fill_key(r);
  r.decision = decide(r, thresholds);
  return r;
}

EstimationReport estimate_analytic(const AnalyticPrediction& a, const ValidatedParams& params,
                                   const Thresholds& thresholds) {
  EstimationReport r;
  const double rounds = static_cast<double>(params->rounds);
  r.stats.R1 = a.R1;
  r.stats.R2 = a.R2;
  r.stats.e_obs1 = a.e_obs1;
  r.stats.e_obs2 = a.e_obs2;
  r.stats.n1 = static_cast<std::uint64_t>(std::llround(rounds * params->p_eta1));
  r.stats.n2 = static_cast<std::uint64_t>(std::llround(rounds * (1.0 - params->p_eta1)));
  r.gamma = a.gamma;
  r.gamma_sigma = gamma_sigma(a.R1, a.R2, rounds * params->p_eta1,
                              rounds * (1.0 - params->p_eta1), params->eta1, params->eta2);
  r.fc_reference_bound = fc_reference_bound(params);
  r.ec_efficiency = params->ec_efficiency;
  r.e_ph = a.e_ph;
  r.key_fraction = a.key_fraction;
  r.decision = decide(r, thresholds);
  return r;
}

}  // namespace vareff
