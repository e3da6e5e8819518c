#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>

#include "vareff/core.hpp"

namespace vareff::testing {

/// Half-width of a z-sigma band for a binomial proportion p over n trials.
inline double band(double p, double n, double z = 4.0) {
  return z * std::sqrt(p * (1.0 - p) / n);
}

inline bool within(double observed, double expected, double half_width) {
  return std::fabs(observed - expected) <= half_width;
}

inline ProtocolParams reference_params(std::uint64_t rounds = 1'000'000) {
  ProtocolParams p;
  p.p_x = 0.9;
  p.eta1 = 0.10;
  p.eta2 = 0.05;
  p.p_eta1 = 0.9;
  p.rounds = rounds;
  return p;
}

/// Parses `key = value` lines.
inline std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return out;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("vareff_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace vareff::testing
