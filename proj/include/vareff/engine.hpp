#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vareff/adversary.hpp"
#include "vareff/core.hpp"

namespace vareff {

/// One protocol round. `eve` is simulator-side ground truth: it is never
/// written to the detection log and never read by the analysis path. Records
/// parsed back from a log have it empty.
struct RoundRecord {
  std::uint64_t round = 0;
  Basis alice_basis = Basis::Linear;
  int alice_bit = 0;
  std::optional<EveLog> eve;
  Basis bob_basis = Basis::Linear;
  EtaIndex eta = EtaIndex::One;
  Outcome outcome = Outcome::inconclusive();
  bool double_click = false;

  bool sifted() const { return outcome.conclusive() && alice_basis == bob_basis; }
  bool raw_key() const {
    return sifted() && bob_basis == Basis::Linear && eta == EtaIndex::One;
  }

  friend bool operator==(const RoundRecord&, const RoundRecord&);
};

/// Detections sorted by attenuator setting.
struct EtaCell {
  std::uint64_t sent = 0;
  std::uint64_t detected = 0;   // conclusive, any basis, before sifting
  std::uint64_t pe_count = 0;   // sifted Diagonal detections
  std::uint64_t pe_errors = 0;  // ... whose bit differs from Alice's

  friend bool operator==(const EtaCell&, const EtaCell&) = default;
};

struct Tally {
  std::array<EtaCell, 2> cells{};
  std::uint64_t raw_key_length = 0;
  // Against Alice's bits: ground truth available to the simulator only.
  std::uint64_t raw_key_errors = 0;
  std::uint64_t double_clicks = 0;

  const EtaCell& operator[](EtaIndex k) const { return cells[slot(k)]; }
  EtaCell& operator[](EtaIndex k) { return cells[slot(k)]; }

  void add(const RoundRecord& r);
  Tally& operator+=(const Tally& other);

  friend bool operator==(const Tally&, const Tally&) = default;
};

/// Alice -> Eve -> Bob for round `index`, using the (seed, index, label)
/// substreams.
RoundRecord simulate_round(const ValidatedParams& params, const AdversaryStrategy& strategy,
                           std::uint64_t seed, std::uint64_t index);

/// Reference implementation: a plain loop over rounds.
std::vector<RoundRecord> run_simulation_serial(const ValidatedParams& params,
                                               const AdversaryStrategy& strategy,
                                               std::uint64_t seed);

/// OpenMP version. `workers == 0` uses the OpenMP default team size. The
/// result is identical to the serial reference for every worker count.
std::vector<RoundRecord> run_simulation(const ValidatedParams& params,
                                        const AdversaryStrategy& strategy,
                                        std::uint64_t seed, int workers = 0);

/// Throws MixedRun unless the round indices are exactly {0, ..., n-1}
/// (in any order).
void check_round_indices(std::span<const RoundRecord> records);

Tally tally_serial(std::span<const RoundRecord> records);

/// Parallel reduction over per-thread tallies; same result as tally_serial.
Tally tally(std::span<const RoundRecord> records, int workers = 0);

/// Ground-truth view of what Eve knows about the raw key.
struct EveRawKeyKnowledge {
  std::uint64_t raw_key_length = 0;
  std::uint64_t blinded = 0;         // raw-key rounds where Eve blinded Bob
  std::uint64_t blinded_matches = 0; // ... and her b_e equals Bob's bit
};

/// Requires records carrying ground truth.
EveRawKeyKnowledge eve_raw_key_knowledge(std::span<const RoundRecord> records);

}  // namespace vareff
