#include "vareff/record_log.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

namespace vareff {

namespace {

char basis_char(Basis b) { return b == Basis::Linear ? 'L' : 'D'; }

char outcome_char(Outcome o) {
  if (!o.conclusive()) return '-';
  return o.value() == 0 ? '0' : '1';
}

void write_row(std::string& line, const RoundRecord& r) {
  line.clear();
  line += std::to_string(r.round);
  line += ',';
  line += basis_char(r.alice_basis);
  line += ',';
  line += static_cast<char>('0' + r.alice_bit);
  line += ',';
  line += basis_char(r.bob_basis);
  line += ',';
  line += r.eta == EtaIndex::One ? '1' : '2';
  line += ',';
  line += outcome_char(r.outcome);
  line += ',';
  line += r.double_click ? '1' : '0';
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorCode::MalformedLog,
              "malformed record log at line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

void write_record_log(std::ostream& os, std::span<const RoundRecord> records) {
  os << kRecordLogHeader << '\n';
  std::string line;
  for (const RoundRecord& r : records) {
    write_row(line, r);
    line += '\n';
    os << line;
  }
}

void write_ground_truth_log(std::ostream& os, std::span<const RoundRecord> records) {
  os << kGroundTruthHeader << '\n';
  std::string line;
  for (const RoundRecord& r : records) {
    write_row(line, r);
    line += ',';
    if (r.eve) {
      line += to_string(r.eve->action);
      line += ',';
      line += r.eve->y_e ? basis_char(*r.eve->y_e) : '-';
      line += ',';
      line += r.eve->b_e ? static_cast<char>('0' + *r.eve->b_e) : '-';
    } else {
      line += "-,-,-";
    }
    line += '\n';
    os << line;
  }
}

std::vector<RoundRecord> read_record_log(std::istream& is) {
  std::vector<RoundRecord> out;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(is, line)) malformed(1, "missing header");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordLogHeader) malformed(line_no, "unexpected header '" + line + "'");

  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::string_view rest = line;
    std::string_view fields[7];
    std::size_t n = 0;
    while (true) {
      const auto comma = rest.find(',');
      if (n == 7) malformed(line_no, "too many columns");
      fields[n++] = rest.substr(0, comma);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (n != 7) malformed(line_no, "expected 7 columns, got " + std::to_string(n));

    RoundRecord r;
    const auto& idx = fields[0];
    auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), r.round);
    if (ec != std::errc{} || ptr != idx.data() + idx.size() || idx.empty())
      malformed(line_no, "bad round index '" + std::string(idx) + "'");

    const auto one_char = [&](std::string_view f, const char* col) {
      if (f.size() != 1) malformed(line_no, std::string("bad ") + col + " '" + std::string(f) + "'");
      return f[0];
    };
    const auto parse_basis = [&](std::string_view f, const char* col) {
      const char c = one_char(f, col);
      if (c == 'L') return Basis::Linear;
      if (c == 'D') return Basis::Diagonal;
      malformed(line_no, std::string("bad ") + col + " '" + std::string(f) + "'");
    };
    const auto parse_bit = [&](std::string_view f, const char* col) {
      const char c = one_char(f, col);
      if (c != '0' && c != '1')
        malformed(line_no, std::string("bad ") + col + " '" + std::string(f) + "'");
      return c - '0';
    };

    r.alice_basis = parse_basis(fields[1], "alice_basis");
    r.alice_bit = parse_bit(fields[2], "alice_bit");
    r.bob_basis = parse_basis(fields[3], "bob_basis");
    const char eta = one_char(fields[4], "eta_index");
    if (eta != '1' && eta != '2') malformed(line_no, "bad eta_index");
    r.eta = eta == '1' ? EtaIndex::One : EtaIndex::Two;
    const char outcome = one_char(fields[5], "outcome");
    if (outcome == '-')
      r.outcome = Outcome::inconclusive();
    else
      r.outcome = Outcome::bit(parse_bit(fields[5], "outcome"));
    r.double_click = parse_bit(fields[6], "double_click") == 1;
    if (r.double_click && !r.outcome.conclusive())
      malformed(line_no, "double click on an inconclusive outcome");
    out.push_back(r);
  }
  return out;
}

}  // namespace vareff
