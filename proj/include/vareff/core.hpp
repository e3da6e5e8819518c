#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vareff {

enum class ErrorCode {
  EtaOrdering,
  ProbabilityRange,
  ZeroRounds,
  NoSamples,
  EObsUndefined,
  MixedRun,
  Domain,
  ZeroDetectionRate,
  UnsupportedModel,
  Config,
  MalformedLog,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported with this exception; `code()` tells
/// them apart for callers that need to branch (the CLI maps them to exit 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Linear is the key basis.
enum class Basis : std::uint8_t { Linear, Diagonal };

enum class Polarization : std::uint8_t { H, V, Plus, Minus };

/// Bob's attenuator setting: selects eta1 or eta2.
enum class EtaIndex : std::uint8_t { One = 1, Two = 2 };

constexpr int slot(EtaIndex k) { return k == EtaIndex::One ? 0 : 1; }

// H and + carry bit 0, V and - carry bit 1.
constexpr Polarization encode(Basis basis, int bit) {
  if (basis == Basis::Linear) return bit == 0 ? Polarization::H : Polarization::V;
  return bit == 0 ? Polarization::Plus : Polarization::Minus;
}

constexpr Basis basis_of(Polarization p) {
  return (p == Polarization::H || p == Polarization::V) ? Basis::Linear
                                                         : Basis::Diagonal;
}

constexpr int bit_of(Polarization p) {
  return (p == Polarization::V || p == Polarization::Minus) ? 1 : 0;
}

/// The other state of the same basis.
constexpr Polarization orthogonal(Polarization p) {
  return encode(basis_of(p), 1 - bit_of(p));
}

/// A measurement result: a bit, or the inconclusive (no-click) outcome.
class Outcome {
 public:
  static constexpr Outcome inconclusive() { return Outcome(-1); }
  static constexpr Outcome bit(int b) { return Outcome(b == 0 ? 0 : 1); }

  constexpr bool conclusive() const { return value_ >= 0; }
  /// Only meaningful when conclusive().
  constexpr int value() const { return value_; }

  friend constexpr bool operator==(Outcome, Outcome) = default;

 private:
  constexpr explicit Outcome(std::int8_t v) : value_(v) {}
  std::int8_t value_;
};

struct ProtocolParams {
  double p_x = 0.9;     // probability of the Linear basis, both parties
  double eta1 = 0.10;
  double eta2 = 0.05;
  double p_eta1 = 0.9;  // probability Bob picks eta1
  std::uint64_t rounds = 1'000'000;
  double ec_efficiency = 1.0;
};

/// ProtocolParams that passed validate_params. Only constructible through it.
class ValidatedParams {
 public:
  const ProtocolParams& get() const { return params_; }
  const ProtocolParams* operator->() const { return &params_; }

  double eta(EtaIndex k) const {
    return k == EtaIndex::One ? params_.eta1 : params_.eta2;
  }

 private:
  explicit ValidatedParams(const ProtocolParams& p) : params_(p) {}
  friend ValidatedParams validate_params(const ProtocolParams&);
  ProtocolParams params_;
};

ValidatedParams validate_params(const ProtocolParams& params);

}  // namespace vareff
