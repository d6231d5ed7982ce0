#include "tripleforge/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "tripleforge/chatetus.hpp"
#include "tripleforge/power_relations.hpp"
#include "tripleforge/records.hpp"

namespace tripleforge::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CommonFlags {
  std::string format = "table";
  std::string mode = "corrected";
  std::string interpretation = "odd-l";

  Format output() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Table;
  }
  Mode enumeration() const { return parse_mode(mode); }
  LInterpretation l_range() const { return parse_interpretation(interpretation); }
};

void add_format(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

void add_mode(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--mode", flags.mode, "Candidate set: corrected or paper-strict")
      ->check(CLI::IsMember({"corrected", "paper-strict"}));
  cmd->add_option("--interpretation", flags.interpretation,
                  "Range of l in P(x) for paper-strict mode: odd-l or any-l")
      ->check(CLI::IsMember({"odd-l", "any-l"}));
}

Integer parse_positive(const std::string& text, const char* what) {
  Integer v;
  try {
    v = parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  if (v == 0) throw UsageError(std::string(what) + " must be >= 1");
  return v;
}

std::string triple_text(const Triple& t) {
  return "(" + to_decimal(t.x()) + ", " + to_decimal(t.y()) + ", " + to_decimal(t.z()) + ")";
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

int cmd_triples(const std::string& x_text, const CommonFlags& flags, bool primitive_only,
                std::ostream& out) {
  const Integer x = parse_positive(x_text, "leg");
  std::vector<Triple> triples = triples_with_leg(x, flags.enumeration(), flags.l_range());
  if (primitive_only) std::erase_if(triples, [](const Triple& t) { return !t.primitive(); });

  const Format format = flags.output();
  if (format == Format::Csv) out << "x,y,z,d,primitive\n";
  for (const auto& t : triples) {
    switch (format) {
      case Format::Table:
        out << to_decimal(t.x()) << ' ' << to_decimal(t.y()) << ' ' << to_decimal(t.z())
            << " d=" << to_decimal(t.d()) << ' ' << (t.primitive() ? "primitive" : "non-primitive")
            << '\n';
        break;
      case Format::Json:
        out << serialize_line(t) << '\n';
        break;
      case Format::Csv:
        out << to_decimal(t.x()) << ',' << to_decimal(t.y()) << ',' << to_decimal(t.z()) << ','
            << to_decimal(t.d()) << ',' << bool_text(t.primitive()) << '\n';
        break;
    }
  }
  return kSuccess;
}

int cmd_relate(const std::string& x_text, const std::string& m_text, Format format,
               bool show_paths, std::ostream& out) {
  const Integer x = parse_positive(x_text, "leg");
  const Integer m = parse_positive(m_text, "exponent");
  if (!m.fits_ulong_p()) throw UsageError("exponent is too large");
  if (is_even(x) || x == 1) throw UsageError("relate needs an odd leg >= 3, got " + x_text);

  const PowerRelationReport report = relate(x, m.get_ui());
  const RelationRecord record = RelationRecord::from_report(report, show_paths);

  switch (format) {
    case Format::Table:
      out << "x=" << to_decimal(record.x) << " m=" << record.m << " y'=" << to_decimal(record.y_prime)
          << " z'=" << to_decimal(record.z_prime) << ' '
          << (record.agreed ? "agreed" : "DISAGREED") << '\n';
      if (record.paths) {
        for (const auto& p : *record.paths) {
          out << "  " << to_string(p.path) << ": y'=" << to_decimal(p.y_prime)
              << " z'=" << to_decimal(p.z_prime) << '\n';
        }
      }
      break;
    case Format::Json:
      out << serialize_line(record) << '\n';
      break;
    case Format::Csv:
      out << "x,m,y_prime,z_prime,agreed";
      if (record.paths) {
        for (const auto& p : *record.paths) {
          out << ',' << to_string(p.path) << "_y_prime," << to_string(p.path) << "_z_prime";
        }
      }
      out << '\n'
          << to_decimal(record.x) << ',' << record.m << ',' << to_decimal(record.y_prime) << ','
          << to_decimal(record.z_prime) << ',' << bool_text(record.agreed);
      if (record.paths) {
        for (const auto& p : *record.paths) {
          out << ',' << to_decimal(p.y_prime) << ',' << to_decimal(p.z_prime);
        }
      }
      out << '\n';
      break;
  }
  return record.agreed ? kSuccess : kPathDisagreement;
}

int cmd_verify(const std::string& range_text, const CommonFlags& flags, unsigned jobs,
               bool odd_only, std::ostream& out) {
  const std::optional<LegRange> range = parse_range(range_text);
  if (!range) throw UsageError("malformed range '" + range_text + "', expected A..B with 1 <= A <= B");

  std::uint64_t limit = 0;
  try {
    limit = sweep_limit_from_env();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (range->last > limit) {
    throw UsageError("range end " + std::to_string(range->last) + " exceeds the sweep limit " +
                     std::to_string(limit) + " (set TRIPLEFORGE_SWEEP_LIMIT to raise it)");
  }

  CrossCheckOptions options;
  options.mode = flags.enumeration();
  options.interpretation = flags.l_range();
  options.sweep_limit = limit;
  options.jobs = jobs;
  options.odd_only = odd_only;
  const DiscrepancyReport report = cross_check(*range, options);
  const SummaryRecord summary = SummaryRecord::from_report(report);

  switch (flags.output()) {
    case Format::Table:
      for (const auto& e : report.entries) {
        for (const auto& t : e.missing) out << "x=" << e.x << " missing " << triple_text(t) << '\n';
        for (const auto& s : e.spurious) {
          out << "x=" << e.x << " spurious d=" << to_decimal(s.d) << ' ' << to_string(s.reason);
          if (s.triple) out << ' ' << triple_text(*s.triple);
          out << '\n';
        }
      }
      out << "verify " << summary.range.first << ".." << summary.range.last
          << " mode=" << to_string(summary.mode)
          << " interpretation=" << to_string(summary.interpretation)
          << " legs=" << summary.legs_checked << " discrepancies=" << summary.discrepancies << ' '
          << (summary.clean ? "clean" : "NOT CLEAN") << '\n';
      break;
    case Format::Json:
      for (const auto& e : report.entries) out << serialize_line(e) << '\n';
      out << serialize_line(summary) << '\n';
      break;
    case Format::Csv:
      out << "x,kind,d,reason,y,z\n";
      for (const auto& e : report.entries) {
        for (const auto& t : e.missing) {
          out << e.x << ",missing,,," << to_decimal(t.y()) << ',' << to_decimal(t.z()) << '\n';
        }
        for (const auto& s : e.spurious) {
          out << e.x << ",spurious," << to_decimal(s.d) << ',' << to_string(s.reason) << ',';
          if (s.triple) out << to_decimal(s.triple->y()) << ',' << to_decimal(s.triple->z());
          else out << ',';
          out << '\n';
        }
      }
      break;
  }
  return summary.clean ? kSuccess : kDiscrepancy;
}

}  // namespace

std::optional<LegRange> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos || sep == 0 || sep + 2 >= text.size()) return std::nullopt;

  auto parse_word = [](std::string_view s) -> std::optional<std::uint64_t> {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };
  const std::string_view view(text);
  const auto first = parse_word(view.substr(0, sep));
  const auto last = parse_word(view.substr(sep + 2));
  if (!first || !last || *first == 0 || *last < *first) return std::nullopt;
  return LegRange{*first, *last};
}

std::uint64_t sweep_limit_from_env() {
  const char* raw = std::getenv("TRIPLEFORGE_SWEEP_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultSweepLimit;
  const std::string_view text(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0) {
    throw std::invalid_argument("TRIPLEFORGE_SWEEP_LIMIT must be a positive integer, got '" +
                                std::string(text) + "'");
  }
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate Pythagorean triples by leg and check the power-leg identities",
               "tripleforge"};
  app.require_subcommand(1);

  CommonFlags triples_flags;
  std::string triples_x;
  bool primitive_only = false;
  auto* triples = app.add_subcommand("triples", "List every Pythagorean triple with leg x");
  triples->add_option("x", triples_x, "The prescribed leg")->required();
  triples->add_flag("--primitive-only", primitive_only, "Only print primitive triples");
  add_mode(triples, triples_flags);
  add_format(triples, triples_flags);

  CommonFlags relate_flags;
  std::string relate_x, relate_m;
  bool show_paths = false;
  auto* relate_cmd = app.add_subcommand("relate", "Relate the d=1 triple on odd x to the one on x^m");
  relate_cmd->add_option("x", relate_x, "Odd leg >= 3")->required();
  relate_cmd->add_option("m", relate_m, "Exponent >= 1")->required();
  relate_cmd->add_flag("--show-paths", show_paths, "Print the value produced by each formula");
  add_format(relate_cmd, relate_flags);

  CommonFlags verify_flags;
  std::string verify_range;
  unsigned jobs = 0;
  bool odd_only = false;
  auto* verify = app.add_subcommand("verify", "Cross-check the enumeration against exhaustive search");
  verify->add_option("range", verify_range, "Inclusive leg range A..B")->required();
  verify->add_option("--jobs,-j", jobs, "Worker threads (0 = all cores)");
  verify->add_flag("--odd-only", odd_only, "Only check odd legs");
  add_mode(verify, verify_flags);
  add_format(verify, verify_flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*triples) return cmd_triples(triples_x, triples_flags, primitive_only, out);
    if (*relate_cmd) return cmd_relate(relate_x, relate_m, relate_flags.output(), show_paths, out);
    if (*verify) return cmd_verify(verify_range, verify_flags, jobs, odd_only, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  err << "error: no command given\n";
  return kUsageError;
}

}  // namespace tripleforge::cli
