#include "tripleforge/records.hpp"

#include <stdexcept>
#include <string>

namespace tripleforge {

using nlohmann::json;

namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view text, const Enum (&values)[N], const char* what) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  throw std::invalid_argument("unknown " + std::string(what) + " '" + std::string(text) + "'");
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw std::invalid_argument(std::string("record is missing field '") + name + "'");
  }
  return j.at(name);
}

Integer integer_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + name + "' must be a decimal string");
  return parse_integer(v.get<std::string>());
}

std::uint64_t word_field(const json& j, const char* name) {
  const Integer v = integer_field(j, name);
  if (!v.fits_ulong_p()) throw std::invalid_argument(std::string("field '") + name + "' out of range");
  return v.get_ui();
}

bool bool_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_boolean()) throw std::invalid_argument(std::string("field '") + name + "' must be a boolean");
  return v.get<bool>();
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

json triple_body(const Triple& t) {
  return {{"x", to_decimal(t.x())},
          {"y", to_decimal(t.y())},
          {"z", to_decimal(t.z())},
          {"d", to_decimal(t.d())},
          {"primitive", t.primitive()}};
}

Triple triple_from_body(const json& j) {
  Triple t(integer_field(j, "x"), integer_field(j, "y"), integer_field(j, "z"));
  if (t.d() != integer_field(j, "d")) throw std::invalid_argument("triple record has inconsistent d");
  if (t.primitive() != bool_field(j, "primitive")) {
    throw std::invalid_argument("triple record has inconsistent primitive flag");
  }
  return t;
}

json to_json_impl(const Triple& t) {
  json j = triple_body(t);
  j["kind"] = "triple";
  return j;
}

json to_json_impl(const RelationRecord& r) {
  json j = {{"kind", "relation"},
            {"x", to_decimal(r.x)},
            {"m", std::to_string(r.m)},
            {"y_prime", to_decimal(r.y_prime)},
            {"z_prime", to_decimal(r.z_prime)},
            {"agreed", r.agreed}};
  if (r.paths) {
    json paths = json::object();
    for (const auto& p : *r.paths) {
      paths[std::string(to_string(p.path))] = {{"y_prime", to_decimal(p.y_prime)},
                                               {"z_prime", to_decimal(p.z_prime)}};
    }
    j["paths"] = std::move(paths);
  }
  return j;
}

json to_json_impl(const LegDiscrepancy& e) {
  json missing = json::array();
  for (const auto& t : e.missing) missing.push_back(triple_body(t));
  json spurious = json::array();
  for (const auto& s : e.spurious) {
    json item = {{"d", to_decimal(s.d)}, {"reason", std::string(to_string(s.reason))}};
    if (s.triple) item["triple"] = triple_body(*s.triple);
    spurious.push_back(std::move(item));
  }
  return {{"kind", "discrepancy"},
          {"x", std::to_string(e.x)},
          {"missing", std::move(missing)},
          {"spurious", std::move(spurious)}};
}

json to_json_impl(const SummaryRecord& s) {
  return {{"kind", "summary"},
          {"mode", std::string(to_string(s.mode))},
          {"interpretation", std::string(to_string(s.interpretation))},
          {"first", std::to_string(s.range.first)},
          {"last", std::to_string(s.range.last)},
          {"legs_checked", std::to_string(s.legs_checked)},
          {"discrepancies", std::to_string(s.discrepancies)},
          {"clean", s.clean}};
}

}  // namespace

Mode parse_mode(std::string_view text) {
  static const Mode values[] = {Mode::PaperStrict, Mode::Corrected};
  return parse_enum(text, values, "mode");
}

LInterpretation parse_interpretation(std::string_view text) {
  static const LInterpretation values[] = {LInterpretation::AnyDivisor, LInterpretation::OddDivisor};
  return parse_enum(text, values, "interpretation");
}

RelationPath parse_relation_path(std::string_view text) {
  static const RelationPath values[] = {RelationPath::Direct, RelationPath::GeometricSum,
                                        RelationPath::AlternatingSum, RelationPath::Equivalent};
  return parse_enum(text, values, "relation path");
}

SpuriousReason parse_spurious_reason(std::string_view text) {
  static const SpuriousReason values[] = {SpuriousReason::NonIntegerResult,
                                          SpuriousReason::DegenerateTriple,
                                          SpuriousReason::NotInOracle};
  return parse_enum(text, values, "spurious reason");
}

RelationRecord RelationRecord::from_report(const PowerRelationReport& report, bool with_paths) {
  RelationRecord r{report.x, report.m, report.y_prime, report.z_prime, std::nullopt, report.agreed};
  if (with_paths) r.paths = report.paths;
  return r;
}

SummaryRecord SummaryRecord::from_report(const DiscrepancyReport& report) {
  return {report.mode, report.interpretation, report.range, report.legs_checked,
          report.entries.size(), report.clean()};
}

std::string_view record_kind(const OutputRecord& record) {
  struct {
    std::string_view operator()(const Triple&) const { return "triple"; }
    std::string_view operator()(const RelationRecord&) const { return "relation"; }
    std::string_view operator()(const LegDiscrepancy&) const { return "discrepancy"; }
    std::string_view operator()(const SummaryRecord&) const { return "summary"; }
  } visitor;
  return std::visit(visitor, record);
}

json to_json(const OutputRecord& record) {
  return std::visit([](const auto& r) { return to_json_impl(r); }, record);
}

OutputRecord record_from_json(const json& j) {
  const std::string kind = string_field(j, "kind");

  if (kind == "triple") return triple_from_body(j);

  if (kind == "relation") {
    RelationRecord r;
    r.x = integer_field(j, "x");
    r.m = word_field(j, "m");
    r.y_prime = integer_field(j, "y_prime");
    r.z_prime = integer_field(j, "z_prime");
    r.agreed = bool_field(j, "agreed");
    if (j.contains("paths")) {
      std::vector<PathValue> paths;
      // Wire order is alphabetical; restore canonical path order.
      for (RelationPath p : kRelationPaths) {
        const std::string name(to_string(p));
        if (!j["paths"].contains(name)) continue;
        const json& v = j["paths"][name];
        paths.push_back({p, integer_field(v, "y_prime"), integer_field(v, "z_prime")});
      }
      for (const auto& [name, _] : j["paths"].items()) parse_relation_path(name);
      r.paths = std::move(paths);
    }
    return r;
  }

  if (kind == "discrepancy") {
    LegDiscrepancy e;
    e.x = word_field(j, "x");
    for (const json& t : field(j, "missing")) e.missing.push_back(triple_from_body(t));
    for (const json& s : field(j, "spurious")) {
      SpuriousCandidate c{integer_field(s, "d"), parse_spurious_reason(string_field(s, "reason")),
                          std::nullopt};
      if (s.contains("triple")) c.triple = triple_from_body(s["triple"]);
      e.spurious.push_back(std::move(c));
    }
    return e;
  }

  if (kind == "summary") {
    SummaryRecord s;
    s.mode = parse_mode(string_field(j, "mode"));
    s.interpretation = parse_interpretation(string_field(j, "interpretation"));
    s.range = {word_field(j, "first"), word_field(j, "last")};
    s.legs_checked = word_field(j, "legs_checked");
    s.discrepancies = word_field(j, "discrepancies");
    s.clean = bool_field(j, "clean");
    return s;
  }

  throw std::invalid_argument("unknown record kind '" + kind + "'");
}

std::string serialize_line(const OutputRecord& record) { return to_json(record).dump(); }

OutputRecord parse_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  return record_from_json(j);
}

}  // namespace tripleforge
