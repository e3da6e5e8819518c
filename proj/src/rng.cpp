#include "vareff/rng.hpp"

namespace vareff {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RoundStream::RoundStream(std::uint64_t seed, std::uint64_t round,
                         std::string_view label) {
  std::uint64_t k = splitmix64(seed);
  k = splitmix64(k ^ round);
  key_ = splitmix64(k ^ fnv1a(label));
}

std::uint64_t RoundStream::next_u64() {
  return splitmix64(key_ + kGolden * ++counter_);
}

double RoundStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace vareff
