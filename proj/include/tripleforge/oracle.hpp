#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tripleforge/chatetus.hpp"
#include "tripleforge/integer.hpp"

namespace tripleforge {

inline constexpr std::uint64_t kDefaultSweepLimit = 100000;

// Exhaustive search over y in [1, (x^2-1)/2] for perfect squares x^2 + y^2.
// Uses nothing but integer square roots, so it shares no logic with the
// divisor-based enumeration it checks. Throws std::out_of_range when x exceeds
// sweep_limit and std::invalid_argument when x = 0.
std::vector<Triple> oracle_triples_with_leg(std::uint64_t x,
                                            std::uint64_t sweep_limit = kDefaultSweepLimit);

namespace detail {
// The two search loops behind oracle_triples_with_leg: machine words while
// z^2 fits 64 bits, arbitrary precision above that.
std::vector<Triple> oracle_search_word(std::uint64_t x);
std::vector<Triple> oracle_search_big(std::uint64_t x);
}  // namespace detail

enum class SpuriousReason {
  NonIntegerResult,  // candidate d gave half-integer y, z
  DegenerateTriple,  // candidate d gave y <= 0
  NotInOracle,       // candidate d gave a triple the search never found
};

std::string_view to_string(SpuriousReason reason);

struct SpuriousCandidate {
  Integer d;
  SpuriousReason reason;
  std::optional<Triple> triple;  // set for NotInOracle

  friend bool operator==(const SpuriousCandidate&, const SpuriousCandidate&) = default;
};

struct LegDiscrepancy {
  std::uint64_t x = 0;
  std::vector<Triple> missing;  // ascending y
  std::vector<SpuriousCandidate> spurious;  // ascending d

  bool empty() const { return missing.empty() && spurious.empty(); }
  friend bool operator==(const LegDiscrepancy&, const LegDiscrepancy&) = default;
};

struct LegRange {
  std::uint64_t first = 1;
  std::uint64_t last = 1;  // inclusive

  friend bool operator==(const LegRange&, const LegRange&) = default;
};

struct DiscrepancyReport {
  Mode mode = Mode::Corrected;
  LInterpretation interpretation = LInterpretation::OddDivisor;
  LegRange range;
  std::uint64_t legs_checked = 0;
  // Only legs with a discrepancy, ascending x.
  std::vector<LegDiscrepancy> entries;

  bool clean() const { return entries.empty(); }
  const LegDiscrepancy* find(std::uint64_t x) const;
};

struct CrossCheckOptions {
  Mode mode = Mode::Corrected;
  LInterpretation interpretation = LInterpretation::OddDivisor;
  std::uint64_t sweep_limit = kDefaultSweepLimit;
  // Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 1;
  // Skip even legs; skipped legs are not counted as checked.
  bool odd_only = false;
};

// Compares the divisor-based enumeration against the oracle for one leg.
LegDiscrepancy compare_leg(std::uint64_t x, const CrossCheckOptions& options);

// Throws std::invalid_argument for an empty or zero-based range and
// std::out_of_range when range.last exceeds the sweep limit.
DiscrepancyReport cross_check(LegRange range, const CrossCheckOptions& options = {});

// Combines reports of the same mode over disjoint ranges; symmetric in its
// arguments. The merged range is the hull of both inputs.
DiscrepancyReport merge_reports(const DiscrepancyReport& a, const DiscrepancyReport& b);

}  // namespace tripleforge
