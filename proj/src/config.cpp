#include "vareff/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <string>

namespace vareff {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  std::size_t line;
};

class Fields {
 public:
  Fields(std::map<std::string, Entry> entries, std::string source)
      : entries_(std::move(entries)), source_(std::move(source)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::optional<double> number(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    used_.insert(key);
    const std::string& v = it->second.value;
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
      fail(it->second.line, "field '" + key + "' is not a number: '" + v + "'");
    return out;
  }

  double required(const std::string& key) {
    auto v = number(key);
    if (!v) throw Error(ErrorCode::Config, source_ + ": missing required field '" + key + "'");
    return *v;
  }

  std::optional<std::uint64_t> integer(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    used_.insert(key);
    const std::string& v = it->second.value;
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
      fail(it->second.line, "field '" + key + "' is not a non-negative integer: '" + v + "'");
    return out;
  }

  std::optional<std::string> text(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    used_.insert(key);
    return it->second.value;
  }

  std::size_t line_of(const std::string& key) const { return entries_.at(key).line; }

  void reject_unused() const {
    for (const auto& [key, entry] : entries_)
      if (!used_.count(key)) fail(entry.line, "unknown field '" + key + "'");
  }

  [[noreturn]] void fail(std::size_t line, const std::string& why) const {
    throw Error(ErrorCode::Config, source_ + ":" + std::to_string(line) + ": " + why);
  }

 private:
  std::map<std::string, Entry> entries_;
  std::set<std::string> used_;
  std::string source_;
};

void apply_proportional(RunConfig& c) {
  if (!c.proportional_scaling) return;
  c.strategy.blinding.scale1 = 1.0;
  c.strategy.blinding.scale2 = c.protocol.eta1 > 0.0 ? c.protocol.eta2 / c.protocol.eta1 : 0.0;
}

}  // namespace

AdversaryStrategy RunConfig::resolved_strategy() const {
  AdversaryStrategy s = strategy;
  s.blinding.p_e = p_e.value_or(protocol.p_x);
  if (proportional_scaling) {
    s.blinding.scale1 = 1.0;
    s.blinding.scale2 = protocol.eta2 / protocol.eta1;
  }
  validate_strategy(s);
  return s;
}

RunConfig parse_config(std::istream& is, std::string_view source) {
  const std::string src(source);
  std::map<std::string, Entry> entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::Config,
                  src + ":" + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty())
      throw Error(ErrorCode::Config,
                  src + ":" + std::to_string(line_no) + ": empty key or value");
    if (entries.count(key))
      throw Error(ErrorCode::Config, src + ":" + std::to_string(line_no) +
                                         ": duplicate field '" + key + "'");
    entries.emplace(key, Entry{value, line_no});
  }

  Fields f(std::move(entries), src);
  RunConfig c;
  c.protocol.p_x = f.required("p_x");
  c.protocol.eta1 = f.required("eta1");
  c.protocol.eta2 = f.required("eta2");
  c.protocol.p_eta1 = f.required("p_eta1");
  if (auto v = f.integer("rounds")) c.protocol.rounds = *v;
  if (auto v = f.number("ec_efficiency")) c.protocol.ec_efficiency = *v;
  if (auto v = f.integer("seed")) c.seed = *v;
  if (auto v = f.number("z_gamma")) c.thresholds.z_gamma = *v;

  const bool honest = f.has("t");
  const bool attack = f.has("q");
  if (honest && attack)
    f.fail(f.line_of("q"), "give either an honest channel (t, e_ch) or a strategy (q, ...), not both");
  if (!honest && !attack)
    throw Error(ErrorCode::Config, src + ": missing channel: set either 't' or 'q'");

  if (honest) {
    for (const char* k : {"p_c", "lambda"})
      if (f.has(k)) f.fail(f.line_of(k), std::string("field '") + k + "' conflicts with 't'");
    const double t = *f.number("t");
    const double e_ch = f.number("e_ch").value_or(0.0);
    try {
      c.strategy = honest_channel_as_strategy(t, e_ch);
    } catch (const Error& e) {
      f.fail(f.line_of("t"), e.what());
    }
  } else {
    if (f.has("e_ch")) f.fail(f.line_of("e_ch"), "field 'e_ch' requires 't'");
    c.strategy.q = *f.number("q");
    c.strategy.p_c = f.number("p_c").value_or(0.0);
    c.strategy.quantum.lambda = f.number("lambda").value_or(0.0);
  }
  c.p_e = f.number("p_e");
  if (auto v = f.number("f_match")) c.strategy.blinding.f_match = *v;
  if (auto v = f.number("p_double")) c.strategy.blinding.p_double = *v;

  const std::string dep = f.text("eta_dependence").value_or("independent");
  if (dep == "independent") {
    c.strategy.blinding.dependence = EtaDependence::Independent;
    for (const char* k : {"scale1", "scale2"})
      if (f.has(k)) f.fail(f.line_of(k), std::string("field '") + k + "' requires eta_dependence = dependent");
  } else if (dep == "dependent") {
    c.strategy.blinding.dependence = EtaDependence::Dependent;
    c.strategy.blinding.scale1 = f.required("scale1");
    c.strategy.blinding.scale2 = f.required("scale2");
  } else if (dep == "proportional") {
    c.strategy.blinding.dependence = EtaDependence::Dependent;
    c.proportional_scaling = true;
    apply_proportional(c);
  } else {
    f.fail(f.line_of("eta_dependence"),
           "eta_dependence must be independent, dependent or proportional; got '" + dep + "'");
  }

  f.reject_unused();

  try {
    (void)c.params();
    (void)c.resolved_strategy();
  } catch (const Error& e) {
    throw Error(ErrorCode::Config, src + ": " + e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, "cannot open config file '" + path + "'");
  return parse_config(in, path);
}

void set_parameter(RunConfig& c, std::string_view name, double value) {
  if (name == "q") c.strategy.q = value;
  else if (name == "p_c") c.strategy.p_c = value;
  else if (name == "lambda") c.strategy.quantum.lambda = value;
  else if (name == "eta1") c.protocol.eta1 = value;
  else if (name == "eta2") c.protocol.eta2 = value;
  else if (name == "p_x") c.protocol.p_x = value;
  else if (name == "p_e") c.p_e = value;
  else if (name == "p_eta1") c.protocol.p_eta1 = value;
  else if (name == "f_match") c.strategy.blinding.f_match = value;
  else if (name == "p_double") c.strategy.blinding.p_double = value;
  else
    throw Error(ErrorCode::Config, "unknown sweep parameter '" + std::string(name) + "'");
  apply_proportional(c);
}

}  // namespace vareff
