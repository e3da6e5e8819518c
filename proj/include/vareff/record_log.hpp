#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "vareff/engine.hpp"

namespace vareff {

inline constexpr std::string_view kRecordLogHeader =
    "round,alice_basis,alice_bit,bob_basis,eta_index,outcome,double_click";

inline constexpr std::string_view kGroundTruthHeader =
    "round,alice_basis,alice_bit,bob_basis,eta_index,outcome,double_click,eve_action,y_e,b_e";

/// Detection log: header plus one comma-separated line per record. Bases
/// are L/D, outcome is 0, 1 or '-'. Eve's actions are never written.
void write_record_log(std::ostream& os, std::span<const RoundRecord> records);

/// Debug-only log with Eve's ground truth appended (y_e/b_e are '-' unless
/// she blinded).
void write_ground_truth_log(std::ostream& os, std::span<const RoundRecord> records);

/// Parses a detection log. Throws MalformedLog naming the 1-based line
/// number on any bad row or header.
std::vector<RoundRecord> read_record_log(std::istream& is);

}  // namespace vareff
