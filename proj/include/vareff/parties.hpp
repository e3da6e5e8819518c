#pragma once

#include <variant>

#include "vareff/blinding.hpp"
#include "vareff/core.hpp"
#include "vareff/rng.hpp"

namespace vareff {

struct PreparedState {
  Basis basis;
  int bit;
  Polarization polarization;

  static PreparedState of(Basis basis, int bit) {
    return {basis, bit, encode(basis, bit)};
  }
};

struct BobSettings {
  Basis basis;
  EtaIndex eta;
};

namespace signal {
struct Blocked {};
struct SinglePhoton {
  Polarization polarization;
};
/// Bright trigger carrying Eve's fake-state measurement record.
struct Trigger {
  Basis y_e;
  int b_e;
};
}  // namespace signal

using Signal = std::variant<signal::Blocked, signal::SinglePhoton, signal::Trigger>;

struct Detection {
  Outcome outcome = Outcome::inconclusive();
  bool double_click = false;
};

PreparedState alice_prepare(RoundStream& rng, const ValidatedParams& params);

BobSettings bob_choose_settings(RoundStream& rng, const ValidatedParams& params);

/// Bob's measurement device. Single photons are thinned by the attenuator
/// (Bernoulli(eta_k)) and then measured; triggers bypass the attenuator and
/// follow the blinding model.
Detection bob_detect(const Signal& signal, const BobSettings& settings,
                     RoundStream& rng, const ValidatedParams& params,
                     const BlindingModel& blinding);

}  // namespace vareff
