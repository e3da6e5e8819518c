#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "vareff/blinding.hpp"
#include "vareff/core.hpp"
#include "vareff/parties.hpp"
#include "vareff/rng.hpp"

namespace vareff {

struct QuantumModel {
  double lambda = 0.0;  // bit-flip rate of forwarded single photons, [0, 1/2]
};

/// Per round, i.i.d.: blind with probability q*p_c, attack the single photon
/// with probability q*(1-p_c), block otherwise.
struct AdversaryStrategy {
  double q = 1.0;
  double p_c = 0.0;
  BlindingModel blinding;
  QuantumModel quantum;
};

void validate_strategy(const AdversaryStrategy& s);

enum class EveAction : std::uint8_t { Blind, Quantum, Block };

std::string_view to_string(EveAction a);

/// y_e and b_e are set exactly when action == Blind.
struct EveLog {
  EveAction action = EveAction::Block;
  std::optional<Basis> y_e;
  std::optional<int> b_e;
};

std::pair<Signal, EveLog> eve_intercept(const PreparedState& state, RoundStream& rng,
                                        const AdversaryStrategy& strategy);

/// An honest lossy, noisy channel is a pure single-photon "attack" with
/// q = t and lambda = e_ch.
AdversaryStrategy honest_channel_as_strategy(double t, double e_ch);

/// Closed-form P(conclusive | blinding round, eta_k) of the implemented
/// device model: P(Bob's basis == y_e) * f_match * scale_k.
double effective_fc(const AdversaryStrategy& strategy, const ValidatedParams& params,
                    EtaIndex k);

/// 1 - 2 p_x (1 - p_x): the basis-guessing bound on f_c. Reported, never
/// enforced (a biased Eve can exceed it under this device model).
double fc_reference_bound(const ValidatedParams& params);

}  // namespace vareff
