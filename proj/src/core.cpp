#include "vareff/core.hpp"

#include <cmath>
#include <sstream>

namespace vareff {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EtaOrdering: return "EtaOrdering";
    case ErrorCode::ProbabilityRange: return "ProbabilityRange";
    case ErrorCode::ZeroRounds: return "ZeroRounds";
    case ErrorCode::NoSamples: return "NoSamples";
    case ErrorCode::EObsUndefined: return "EObsUndefined";
    case ErrorCode::MixedRun: return "MixedRunError";
    case ErrorCode::Domain: return "DomainError";
    case ErrorCode::ZeroDetectionRate: return "ZeroDetectionRate";
    case ErrorCode::UnsupportedModel: return "UnsupportedModel";
    case ErrorCode::Config: return "ConfigError";
    case ErrorCode::MalformedLog: return "MalformedLog";
  }
  return "Unknown";
}

namespace {

void require_open(double v, double lo, double hi, const char* name) {
  if (!(v > lo && v < hi)) {
    std::ostringstream os;
    os << name << " = " << v << " must lie in (" << lo << ", " << hi << ")";
    throw Error(ErrorCode::ProbabilityRange, os.str());
  }
}

}  // namespace

ValidatedParams validate_params(const ProtocolParams& p) {
  require_open(p.p_x, 0.5, 1.0, "p_x");
  if (!(p.eta1 > 0.0 && p.eta1 <= 1.0))
    throw Error(ErrorCode::ProbabilityRange, "eta1 must lie in (0, 1]");
  if (!(p.eta2 >= 0.0 && p.eta2 < 1.0))
    throw Error(ErrorCode::ProbabilityRange, "eta2 must lie in [0, 1)");
  if (!(p.eta1 > p.eta2))
    throw Error(ErrorCode::EtaOrdering, "eta1 must be strictly greater than eta2");
  require_open(p.p_eta1, 0.0, 1.0, "p_eta1");
  if (p.rounds == 0) throw Error(ErrorCode::ZeroRounds, "rounds must be >= 1");
  if (!(p.ec_efficiency >= 1.0) || !std::isfinite(p.ec_efficiency))
    throw Error(ErrorCode::ProbabilityRange, "ec_efficiency must be >= 1");
  return ValidatedParams(p);
}

}  // namespace vareff
