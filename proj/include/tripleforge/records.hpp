#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tripleforge/chatetus.hpp"
#include "tripleforge/oracle.hpp"
#include "tripleforge/power_relations.hpp"

namespace tripleforge {

// Wire form of a PowerRelationReport. Paths are present only when requested.
struct RelationRecord {
  Integer x;
  unsigned long m = 0;
  Integer y_prime;
  Integer z_prime;
  std::optional<std::vector<PathValue>> paths;
  bool agreed = false;

  static RelationRecord from_report(const PowerRelationReport& report, bool with_paths);
  friend bool operator==(const RelationRecord&, const RelationRecord&) = default;
};

// Trailer of a verification run.
struct SummaryRecord {
  Mode mode = Mode::Corrected;
  LInterpretation interpretation = LInterpretation::OddDivisor;
  LegRange range;
  std::uint64_t legs_checked = 0;
  std::uint64_t discrepancies = 0;
  bool clean = true;

  static SummaryRecord from_report(const DiscrepancyReport& report);
  friend bool operator==(const SummaryRecord&, const SummaryRecord&) = default;
};

using OutputRecord = std::variant<Triple, RelationRecord, LegDiscrepancy, SummaryRecord>;

// Inverses of the to_string overloads; throw std::invalid_argument.
Mode parse_mode(std::string_view text);
LInterpretation parse_interpretation(std::string_view text);
RelationPath parse_relation_path(std::string_view text);
SpuriousReason parse_spurious_reason(std::string_view text);

// "triple", "relation", "discrepancy" or "summary".
std::string_view record_kind(const OutputRecord& record);

// All integers are written as decimal strings.
nlohmann::json to_json(const OutputRecord& record);

// Inverse of to_json. Throws std::invalid_argument on unknown kinds, missing
// fields or malformed integers.
OutputRecord record_from_json(const nlohmann::json& j);

// One compact JSON object, no trailing newline.
std::string serialize_line(const OutputRecord& record);
OutputRecord parse_line(const std::string& line);

}  // namespace tripleforge
