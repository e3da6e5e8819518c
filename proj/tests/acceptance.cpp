// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "vareff/analysis.hpp"
#include "vareff/commands.hpp"
#include "vareff/engine.hpp"
#include "vareff/record_log.hpp"

using namespace vareff;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ValidatedParams reference_params(std::uint64_t rounds) {
  ProtocolParams p;
  p.p_x = 0.9;
  p.eta1 = 0.10;
  p.eta2 = 0.05;
  p.p_eta1 = 0.9;
  p.rounds = rounds;
  return validate_params(p);
}

AdversaryStrategy pure_blinding() {
  AdversaryStrategy s;
  s.q = 1.0;
  s.p_c = 1.0;
  s.blinding.p_e = 0.9;
  return s;
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "vareff_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

int run_binary(const std::string& args) {
  const std::string cmd = std::string(VAREFF_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 1. gamma recovers q p_c f_c from the analytic rates.
void identity() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  constexpr int kTuples = 10000;
  double worst = 0.0;
  for (int i = 0; i < kTuples; ++i) {
    ProtocolParams p;
    p.p_x = 0.5 + 0.49 * u(gen) + 1e-3;
    p.eta1 = 1.0 - u(gen);  // (0, 1]
    p.eta2 = 0.5 * p.eta1 * u(gen);
    AdversaryStrategy s;
    s.q = 0.1 + 0.9 * u(gen);
    s.p_c = 0.1 + 0.9 * u(gen);
    s.blinding.p_e = p.p_x;
    // [p_x^2 + (1-p_x)^2] lies in [1/2, 1), so f_c lies in [0.1, 1).
    s.blinding.f_match = 0.2 + 0.8 * u(gen);
    s.quantum.lambda = 0.5 * u(gen);
    const ValidatedParams params = validate_params(p);
    const AnalyticPrediction a = analytic_oracle(s, params);
    const double f_c =
        (p.p_x * p.p_x + (1 - p.p_x) * (1 - p.p_x)) * s.blinding.f_match;
    const double truth = s.q * s.p_c * f_c;
    worst = std::max(worst, std::fabs(a.gamma - truth) / truth);
  }
  const double elapsed = seconds_since(t0);
  report(1, worst <= 1e-12 && elapsed < 1.0, "gamma identity",
         fmt("%d tuples, max relative error %.3g (<= 1e-12), %.3f s (< 1 s)", kTuples, worst,
             elapsed));
}

// 2. Honest channel: every run accepted, gamma within 5 sigma.
void honest_null() {
  const auto t0 = std::chrono::steady_clock::now();
  const ValidatedParams params = reference_params(1'000'000);
  const AdversaryStrategy s = honest_channel_as_strategy(0.25, 0.01);
  int accepted = 0;
  int within = 0;
  double worst_z = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const EstimationReport r = estimate(tally(run_simulation(params, s, seed)), params, {});
    if (!r.decision.abort) ++accepted;
    if (std::fabs(r.gamma) <= 5 * r.gamma_sigma) ++within;
    worst_z = std::max(worst_z, r.gamma / r.gamma_sigma);
  }
  report(2, accepted == 20 && within == 20, "honest-channel null",
         fmt("t=0.25 e_ch=0.01 N=1e6, %d/20 accepted, %d/20 with |gamma| <= 5 sigma "
             "(max gamma/sigma %.2f), %.1f s",
             accepted, within, worst_z, seconds_since(t0)));
}

// 3. Mixed strategy against the closed forms.
void mixed_strategy() {
  const ValidatedParams params = reference_params(1'000'000);
  AdversaryStrategy s;
  s.q = 1.0;
  s.p_c = 0.5;
  s.blinding.p_e = 0.9;
  s.quantum.lambda = 0.02;
  const ConditionalStats m = conditional_stats(tally(run_simulation(params, s, 2024)));
  const double n1 = static_cast<double>(m.n1), n2 = static_cast<double>(m.n2);
  const double R1 = 0.46, R2 = 0.435, g = 0.41;
  const double s1 = std::sqrt(R1 * (1 - R1) / n1);
  const double s2 = std::sqrt(R2 * (1 - R2) / n2);
  const double sg = gamma_sigma(R1, R2, n1, n2, params->eta1, params->eta2);
  const double gm = gamma_unclamped(m.R1, m.R2, params->eta1, params->eta2);
  const double z1 = (m.R1 - R1) / s1, z2 = (m.R2 - R2) / s2, zg = (gm - g) / sg;
  const bool ok = std::fabs(z1) <= 4 && std::fabs(z2) <= 4 && std::fabs(zg) <= 4;
  report(3, ok, "mixed strategy vs closed forms",
         fmt("R1=%.5f (%+.2f sigma), R2=%.5f (%+.2f sigma), gamma=%.5f (%+.2f sigma), band 4 sigma",
             m.R1, z1, m.R2, z2, gm, zg));
}

// 4. Pure blinding is always caught, while Eve holds the whole raw key.
void pure_blinding_kill() {
  const ValidatedParams params = reference_params(100'000);
  constexpr int kSeeds = 20;
  int both = 0;
  int clean = 0;
  std::uint64_t raw = 0;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const auto records = run_simulation(params, pure_blinding(), seed);
    const Tally t = tally(records);
    const EstimationReport r = estimate(t, params, {});
    if (r.decision.has(abort_reason::NonPositiveKey) &&
        r.decision.has(abort_reason::GammaDiscrepancy))
      ++both;
    const EveRawKeyKnowledge k = eve_raw_key_knowledge(records);
    if (t.raw_key_errors == 0 && k.raw_key_length > 0 && k.blinded_matches == k.raw_key_length)
      ++clean;
    raw += k.raw_key_length;
  }
  report(4, both == kSeeds && clean == kSeeds, "pure-blinding kill",
         fmt("N=1e5, %d/%d seeds abort with GammaDiscrepancy|NonPositiveKey, "
             "%d/%d with zero raw-key errors and Eve matching all %llu raw-key bits",
             both, kSeeds, clean, kSeeds, static_cast<unsigned long long>(raw)));
}

// 5. BB84 threshold.
void bb84_threshold() {
  const auto k = [](double e) {
    return key_fraction(phase_error_bound(0.0, 1.0, e).value, e);
  };
  const double h = binary_entropy(0.11);
  const bool ok = k(0.11) > 0 && k(0.115) < 0 && std::fabs(h - 0.49991) <= 1e-5;
  report(5, ok, "BB84 threshold",
         fmt("key(0.11)=%.6g, key(0.115)=%.6g, h2(0.11)=%.8f (0.49991 +- 1e-5)", k(0.11),
             k(0.115), h));
}

// 6. Efficiency-proportional blinding passes the check: the expected blind spot.
void negative_control() {
  const ValidatedParams params = reference_params(1'000'000);
  AdversaryStrategy s = pure_blinding();
  s.blinding.dependence = EtaDependence::Dependent;
  s.blinding.scale1 = 1.0;
  s.blinding.scale2 = params->eta2 / params->eta1;
  const auto records = run_simulation(params, s, 6);
  const Tally t = tally(records);
  const EstimationReport r = estimate(t, params, {});
  const EveRawKeyKnowledge k = eve_raw_key_knowledge(records);
  const bool ok = r.gamma <= 5 * r.gamma_sigma && t.raw_key_errors == 0 &&
                  k.raw_key_length > 0 && k.blinded_matches == k.raw_key_length;
  report(6, ok, "negative control (expected blind spot)",
         fmt("N=1e6, gamma=%.3g <= 5 sigma=%.3g, Eve matches %llu/%llu raw-key bits",
             r.gamma, 5 * r.gamma_sigma, static_cast<unsigned long long>(k.blinded_matches),
             static_cast<unsigned long long>(k.raw_key_length)));
}

// 7. Determinism across worker counts, in-process and through the binary.
void determinism(const fs::path& dir) {
  const auto t0 = std::chrono::steady_clock::now();
  const ValidatedParams params = reference_params(1'000'000);
  AdversaryStrategy s;
  s.q = 0.8;
  s.p_c = 0.3;
  s.blinding.p_e = 0.7;
  s.blinding.p_double = 0.05;
  s.quantum.lambda = 0.03;

  const auto run = [&](int workers) {
    const auto records = run_simulation(params, s, 99, workers);
    std::ostringstream log;
    write_record_log(log, records);
    return std::pair{log.str(), render_report(estimate(tally(records, workers), params, {}))};
  };
  const auto [log1, report1] = run(1);
  const auto [log8, report8] = run(8);
  const std::size_t h1 = std::hash<std::string>{}(log1), h8 = std::hash<std::string>{}(log8);
  bool ok = h1 == h8 && log1 == log8 && report1 == report8;

  write_file(dir / "det.cfg",
             "p_x = 0.9\neta1 = 0.10\neta2 = 0.05\np_eta1 = 0.9\n"
             "q = 0.8\np_c = 0.3\np_e = 0.7\np_double = 0.05\nlambda = 0.03\n"
             "rounds = 1000000\nseed = 99\n");
  const auto cli = [&](int workers) {
    const std::string stem = (dir / ("det" + std::to_string(workers))).string();
    const int rc = run_binary("simulate --config " + (dir / "det.cfg").string() +
                              " --threads " + std::to_string(workers) + " --out " + stem +
                              ".csv --report " + stem + ".report");
    return std::tuple{rc, read_file(stem + ".csv"), read_file(stem + ".report")};
  };
  const auto [rc1, clog1, crep1] = cli(1);
  const auto [rc8, clog8, crep8] = cli(8);
  ok = ok && rc1 == rc8 && (rc1 == 0 || rc1 == 2) && !clog1.empty() && clog1 == clog8 &&
       crep1 == crep8 && clog1 == log1 && crep1 == report1;
  const double elapsed = seconds_since(t0);
  report(7, ok && elapsed < 60, "determinism",
         fmt("workers 1 vs 8: log hash %016zx vs %016zx, reports %s; CLI logs/reports %s; "
             "%.1f s (< 60 s)",
             h1, h8, report1 == report8 ? "identical" : "differ",
             clog1 == clog8 && crep1 == crep8 && clog1 == log1 ? "identical" : "differ",
             elapsed));
}

// 8. simulate -> analyze reproduces the report.
void round_trip(const fs::path& dir) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int identical = 0;
  std::string first_diff;
  for (int i = 0; i < 10; ++i) {
    const double eta1 = 0.05 + 0.9 * u(gen);
    std::ostringstream cfg;
    cfg.precision(17);
    cfg << "p_x = " << 0.55 + 0.4 * u(gen) << "\n"
        << "eta1 = " << eta1 << "\n"
        << "eta2 = " << eta1 * 0.8 * u(gen) << "\n"
        << "p_eta1 = " << 0.5 + 0.45 * u(gen) << "\n"
        << "rounds = " << 20000 + static_cast<int>(80000 * u(gen)) << "\n"
        << "seed = " << gen() % 100000 << "\n";
    if (i % 3 == 0) {
      cfg << "t = " << u(gen) << "\ne_ch = " << 0.1 * u(gen) << "\n";
    } else {
      cfg << "q = " << u(gen) << "\np_c = " << u(gen) << "\nlambda = " << 0.2 * u(gen) << "\n"
          << "p_e = " << u(gen) << "\np_double = " << 0.1 * u(gen) << "\n";
    }
    const fs::path cfg_path = dir / ("rt" + std::to_string(i) + ".cfg");
    write_file(cfg_path, cfg.str());

    cli::CommonOptions o;
    o.config_path = cfg_path.string();
    o.out_path = (dir / ("rt" + std::to_string(i) + ".csv")).string();
    std::ostringstream sim_out, sim_err, an_out, an_err;
    const int rc_sim = cli::cmd_simulate(o, sim_out, sim_err);
    cli::CommonOptions a;
    a.config_path = o.config_path;
    const int rc_an = cli::cmd_analyze(o.out_path, a, an_out, an_err);
    if (rc_sim != cli::kExitError && rc_sim == rc_an && !sim_out.str().empty() &&
        sim_out.str() == an_out.str())
      ++identical;
    else if (first_diff.empty())
      first_diff = fmt(" (config %d: exit %d vs %d%s)", i, rc_sim, rc_an,
                       sim_err.str().empty() ? "" : (", " + sim_err.str()).c_str());
  }
  report(8, identical == 10, "simulate/analyze round trip",
         fmt("%d/10 random configs reproduce the report bit-for-bit%s", identical,
             first_diff.c_str()));
}

}  // namespace

int main() {
  const fs::path dir = scratch_dir();
  identity();
  honest_null();
  mixed_strategy();
  pure_blinding_kill();
  bb84_threshold();
  negative_control();
  determinism(dir);
  round_trip(dir);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
