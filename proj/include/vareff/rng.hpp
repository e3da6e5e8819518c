#pragma once

#include <cstdint>
#include <string_view>

namespace vareff {

/// Consumer labels used by the round loop. Any string works as a label;
/// these are the ones the engine draws from.
namespace label {
inline constexpr std::string_view alice = "alice";
inline constexpr std::string_view eve = "eve";
inline constexpr std::string_view bob = "bob";
}  // namespace label

/// Counter-based stream keyed by (seed, round, label).
///
/// The key is a hash of the triple; draw n is splitmix64(key + n * golden).
/// No state is shared between rounds, so the values drawn for round i do not
/// depend on which worker handles it or in what order rounds are processed.
/// Uniforms and Bernoulli draws are derived here rather than through
/// <random> distributions, whose output is implementation-defined.
class RoundStream {
 public:
  RoundStream(std::uint64_t seed, std::uint64_t round, std::string_view label);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  /// True with probability p; p <= 0 never fires, p >= 1 always fires.
  bool bernoulli(double p) { return uniform() < p; }
  int bit() { return static_cast<int>(next_u64() >> 63); }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline RoundStream round_rng(std::uint64_t seed, std::uint64_t round,
                             std::string_view label) {
  return RoundStream(seed, round, label);
}

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace vareff
