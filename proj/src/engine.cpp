#include "vareff/engine.hpp"

#include <omp.h>

#include <string>

namespace vareff {

bool operator==(const RoundRecord& a, const RoundRecord& b) {
  const auto same_eve = [](const std::optional<EveLog>& x, const std::optional<EveLog>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->action == y->action && x->y_e == y->y_e && x->b_e == y->b_e;
  };
  return a.round == b.round && a.alice_basis == b.alice_basis &&
         a.alice_bit == b.alice_bit && same_eve(a.eve, b.eve) &&
         a.bob_basis == b.bob_basis && a.eta == b.eta && a.outcome == b.outcome &&
         a.double_click == b.double_click;
}

void Tally::add(const RoundRecord& r) {
  EtaCell& cell = (*this)[r.eta];
  ++cell.sent;
  if (!r.outcome.conclusive()) return;
  ++cell.detected;
  if (r.double_click) ++double_clicks;
  if (!r.sifted()) return;
  const bool error = r.outcome.value() != r.alice_bit;
  if (r.bob_basis == Basis::Diagonal) {
    ++cell.pe_count;
    if (error) ++cell.pe_errors;
  } else if (r.eta == EtaIndex::One) {
    ++raw_key_length;
    if (error) ++raw_key_errors;
  }
}

Tally& Tally::operator+=(const Tally& o) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i].sent += o.cells[i].sent;
    cells[i].detected += o.cells[i].detected;
    cells[i].pe_count += o.cells[i].pe_count;
    cells[i].pe_errors += o.cells[i].pe_errors;
  }
  raw_key_length += o.raw_key_length;
  raw_key_errors += o.raw_key_errors;
  double_clicks += o.double_clicks;
  return *this;
}

RoundRecord simulate_round(const ValidatedParams& params, const AdversaryStrategy& strategy,
                           std::uint64_t seed, std::uint64_t index) {
  RoundStream alice_rng = round_rng(seed, index, label::alice);
  RoundStream eve_rng = round_rng(seed, index, label::eve);
  RoundStream bob_rng = round_rng(seed, index, label::bob);

  const PreparedState state = alice_prepare(alice_rng, params);
  auto [sig, eve] = eve_intercept(state, eve_rng, strategy);
  const BobSettings settings = bob_choose_settings(bob_rng, params);
  const Detection det = bob_detect(sig, settings, bob_rng, params, strategy.blinding);

  RoundRecord r;
  r.round = index;
  r.alice_basis = state.basis;
  r.alice_bit = state.bit;
  r.eve = eve;
  r.bob_basis = settings.basis;
  r.eta = settings.eta;
  r.outcome = det.outcome;
  r.double_click = det.double_click;
  return r;
}

std::vector<RoundRecord> run_simulation_serial(const ValidatedParams& params,
                                               const AdversaryStrategy& strategy,
                                               std::uint64_t seed) {
  validate_strategy(strategy);
  std::vector<RoundRecord> out;
  out.reserve(params->rounds);
  for (std::uint64_t i = 0; i < params->rounds; ++i)
    out.push_back(simulate_round(params, strategy, seed, i));
  return out;
}

std::vector<RoundRecord> run_simulation(const ValidatedParams& params,
                                        const AdversaryStrategy& strategy,
                                        std::uint64_t seed, int workers) {
  validate_strategy(strategy);
  const auto n = static_cast<std::int64_t>(params->rounds);
  std::vector<RoundRecord> out(static_cast<std::size_t>(n));
  const int team = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for num_threads(team) schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        simulate_round(params, strategy, seed, static_cast<std::uint64_t>(i));

  return out;
}

void check_round_indices(std::span<const RoundRecord> records) {
  std::vector<bool> seen(records.size(), false);
  for (const RoundRecord& r : records) {
    if (r.round >= records.size())
      throw Error(ErrorCode::MixedRun,
                  "round index " + std::to_string(r.round) + " out of range for a run of " +
                      std::to_string(records.size()) + " records");
    if (seen[r.round])
      throw Error(ErrorCode::MixedRun, "duplicate round index " + std::to_string(r.round));
    seen[r.round] = true;
  }
}

Tally tally_serial(std::span<const RoundRecord> records) {
  check_round_indices(records);
  Tally t;
  for (const RoundRecord& r : records) t.add(r);
  return t;
}

Tally tally(std::span<const RoundRecord> records, int workers) {
  check_round_indices(records);
  const auto n = static_cast<std::int64_t>(records.size());
  const int team = workers > 0 ? workers : omp_get_max_threads();
  Tally total;

#pragma omp parallel num_threads(team)
  {
    Tally local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) local.add(records[static_cast<std::size_t>(i)]);
#pragma omp critical(vareff_tally_merge)
    total += local;
  }
  return total;
}

EveRawKeyKnowledge eve_raw_key_knowledge(std::span<const RoundRecord> records) {
  EveRawKeyKnowledge k;
  for (const RoundRecord& r : records) {
    if (!r.raw_key()) continue;
    if (!r.eve)
      throw Error(ErrorCode::UnsupportedModel, "record " + std::to_string(r.round) +
                                                   " carries no ground truth");
    ++k.raw_key_length;
    if (r.eve->action != EveAction::Blind) continue;
    ++k.blinded;
    if (r.eve->b_e == r.outcome.value()) ++k.blinded_matches;
  }
  return k;
}

}  // namespace vareff
