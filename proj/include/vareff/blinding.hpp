#pragma once

#include "vareff/core.hpp"

namespace vareff {

enum class EtaDependence { Independent, Dependent };

/// Response of the blinded device to Eve's trigger pulses.
///
/// With `Independent` the conclusive probability is the same for both
/// attenuator settings, which is the attack class the efficiency check can
/// see. `Dependent` multiplies f_match by a per-setting scale; choosing
/// scale_k proportional to eta_k imitates an honest efficiency response and
/// is the known blind spot of the check.
struct BlindingModel {
  double p_e = 0.9;      // probability Eve measures in Linear
  double f_match = 1.0;  // conclusive probability when Bob's basis matches y_e
  double p_double = 0.0; // double-click probability on conclusive triggers
  EtaDependence dependence = EtaDependence::Independent;
  double scale1 = 1.0;
  double scale2 = 1.0;

  double scale(EtaIndex k) const {
    if (dependence == EtaDependence::Independent) return 1.0;
    return k == EtaIndex::One ? scale1 : scale2;
  }
};

}  // namespace vareff
