#include "vareff/adversary.hpp"

#include <string>

namespace vareff {

namespace {

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw Error(ErrorCode::ProbabilityRange, std::string(name) + " must lie in [0, 1]");
}

}  // namespace

void validate_strategy(const AdversaryStrategy& s) {
  require_unit(s.q, "q");
  require_unit(s.p_c, "p_c");
  require_unit(s.blinding.p_e, "p_e");
  require_unit(s.blinding.f_match, "f_match");
  require_unit(s.blinding.p_double, "p_double");
  require_unit(s.blinding.scale1, "scale1");
  require_unit(s.blinding.scale2, "scale2");
  if (!(s.quantum.lambda >= 0.0 && s.quantum.lambda <= 0.5))
    throw Error(ErrorCode::ProbabilityRange, "lambda must lie in [0, 1/2]");
}

std::string_view to_string(EveAction a) {
  switch (a) {
    case EveAction::Blind: return "blind";
    case EveAction::Quantum: return "quantum";
    case EveAction::Block: return "block";
  }
  return "?";
}

std::pair<Signal, EveLog> eve_intercept(const PreparedState& state, RoundStream& rng,
                                        const AdversaryStrategy& strategy) {
  const double u = rng.uniform();
  if (u < strategy.q * strategy.p_c) {
    const Basis y_e = rng.bernoulli(strategy.blinding.p_e) ? Basis::Linear : Basis::Diagonal;
    // Measuring in the wrong basis gives a uniformly random result.
    const int b_e = (y_e == state.basis) ? state.bit : rng.bit();
    return {signal::Trigger{y_e, b_e}, EveLog{EveAction::Blind, y_e, b_e}};
  }
  if (u < strategy.q) {
    Polarization p = state.polarization;
    if (rng.bernoulli(strategy.quantum.lambda)) p = orthogonal(p);
    return {signal::SinglePhoton{p}, EveLog{EveAction::Quantum, {}, {}}};
  }
  return {signal::Blocked{}, EveLog{EveAction::Block, {}, {}}};
}

AdversaryStrategy honest_channel_as_strategy(double t, double e_ch) {
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(ErrorCode::ProbabilityRange, "transmissivity t must lie in [0, 1]");
  if (!(e_ch >= 0.0 && e_ch <= 0.5))
    throw Error(ErrorCode::ProbabilityRange, "e_ch must lie in [0, 1/2]");
  AdversaryStrategy s;
  s.q = t;
  s.p_c = 0.0;
  s.quantum.lambda = e_ch;
  s.blinding.p_e = 0.5;
  return s;
}

double effective_fc(const AdversaryStrategy& strategy, const ValidatedParams& params,
                    EtaIndex k) {
  const double p_x = params->p_x;
  const double p_e = strategy.blinding.p_e;
  const double basis_match = p_e * p_x + (1.0 - p_e) * (1.0 - p_x);
  return basis_match * strategy.blinding.f_match * strategy.blinding.scale(k);
}

double fc_reference_bound(const ValidatedParams& params) {
  const double p_x = params->p_x;
  return 1.0 - 2.0 * p_x * (1.0 - p_x);
}

}  // namespace vareff
