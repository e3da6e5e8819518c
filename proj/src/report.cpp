#include <charconv>
#include <string>

#include "vareff/analysis.hpp"

namespace vareff {

std::string format_number(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string render_report(const EstimationReport& r) {
  std::string out;
  const auto line = [&](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  const auto opt = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("undefined");
  };

  line("R1", format_number(r.stats.R1));
  line("R2", format_number(r.stats.R2));
  line("e_obs1", opt(r.stats.e_obs1));
  line("e_obs2", opt(r.stats.e_obs2));
  line("gamma", format_number(r.gamma));
  line("gamma_sigma", format_number(r.gamma_sigma));
  line("e_ph_bound", r.e_ph ? format_number(r.e_ph->value) : "undefined");
  line("e_ph_saturated", r.e_ph && r.e_ph->saturated ? "true" : "false");
  line("key_fraction", opt(r.key_fraction));
  line("fc_reference_bound", format_number(r.fc_reference_bound));
  line("abort", r.decision.abort ? "true" : "false");
  line("abort_reason", r.decision.reason_text());
  line("n1", std::to_string(r.stats.n1));
  line("n2", std::to_string(r.stats.n2));
  return out;
}

}  // namespace vareff
