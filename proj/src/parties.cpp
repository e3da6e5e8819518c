#include "vareff/parties.hpp"

namespace vareff {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Basis draw_basis(RoundStream& rng, double p_x) {
  return rng.bernoulli(p_x) ? Basis::Linear : Basis::Diagonal;
}

}  // namespace

PreparedState alice_prepare(RoundStream& rng, const ValidatedParams& params) {
  const Basis basis = draw_basis(rng, params->p_x);
  return PreparedState::of(basis, rng.bit());
}

BobSettings bob_choose_settings(RoundStream& rng, const ValidatedParams& params) {
  const Basis basis = draw_basis(rng, params->p_x);
  const EtaIndex eta = rng.bernoulli(params->p_eta1) ? EtaIndex::One : EtaIndex::Two;
  return {basis, eta};
}

Detection bob_detect(const Signal& signal, const BobSettings& settings,
                     RoundStream& rng, const ValidatedParams& params,
                     const BlindingModel& blinding) {
  return std::visit(
      overloaded{
          [](const signal::Blocked&) { return Detection{}; },
          [&](const signal::SinglePhoton& s) {
            if (!rng.bernoulli(params.eta(settings.eta))) return Detection{};
            if (basis_of(s.polarization) == settings.basis)
              return Detection{Outcome::bit(bit_of(s.polarization)), false};
            return Detection{Outcome::bit(rng.bit()), false};
          },
          [&](const signal::Trigger& t) {
            if (t.y_e != settings.basis) return Detection{};
            const double f = blinding.f_match * blinding.scale(settings.eta);
            if (!rng.bernoulli(f)) return Detection{};
            if (rng.bernoulli(blinding.p_double))
              return Detection{Outcome::bit(rng.bit()), true};
            return Detection{Outcome::bit(t.b_e), false};
          },
      },
      signal);
}

}  // namespace vareff
