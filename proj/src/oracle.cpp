#include "tripleforge/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "tripleforge/factorization.hpp"

namespace tripleforge {

namespace {

// Largest z = (x^2+1)/2 whose square still fits a machine word.
constexpr std::uint64_t kWordPathLimit = 92681;

}  // namespace

namespace detail {

std::vector<Triple> oracle_search_word(std::uint64_t x) {
  if (x > kWordPathLimit) throw std::out_of_range("leg too large for the machine-word search");
  std::vector<Triple> out;
  const std::uint64_t square = x * x;
  const std::uint64_t y_max = (square - 1) / 2;
  for (std::uint64_t y = 1; y <= y_max; ++y) {
    auto [z, exact] = integer_sqrt(square + y * y);
    if (exact) out.emplace_back(Integer(x), Integer(y), Integer(z));
  }
  return out;
}

std::vector<Triple> oracle_search_big(std::uint64_t x) {
  std::vector<Triple> out;
  const Integer leg(x);
  const Integer square = leg * leg;
  const Integer y_max = (square - 1) / 2;
  for (Integer y = 1; y <= y_max; ++y) {
    SquareRoot r = integer_sqrt(square + y * y);
    if (r.exact) out.emplace_back(leg, y, std::move(r.root));
  }
  return out;
}

}  // namespace detail

std::vector<Triple> oracle_triples_with_leg(std::uint64_t x, std::uint64_t sweep_limit) {
  if (x == 0) throw std::invalid_argument("oracle leg must be >= 1");
  if (x > sweep_limit) {
    throw std::out_of_range("leg " + std::to_string(x) + " exceeds sweep limit " +
                            std::to_string(sweep_limit));
  }
  return x <= kWordPathLimit ? detail::oracle_search_word(x) : detail::oracle_search_big(x);
}

std::string_view to_string(SpuriousReason reason) {
  switch (reason) {
    case SpuriousReason::NonIntegerResult:
      return "NonIntegerResult";
    case SpuriousReason::DegenerateTriple:
      return "DegenerateTriple";
    case SpuriousReason::NotInOracle:
      return "NotInOracle";
  }
  return "?";
}

const LegDiscrepancy* DiscrepancyReport::find(std::uint64_t x) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), x,
                             [](const LegDiscrepancy& e, std::uint64_t v) { return e.x < v; });
  return it != entries.end() && it->x == x ? &*it : nullptr;
}

LegDiscrepancy compare_leg(std::uint64_t x, const CrossCheckOptions& options) {
  const Integer leg(x);
  const std::vector<Triple> truth = oracle_triples_with_leg(x, options.sweep_limit);

  LegDiscrepancy entry;
  entry.x = x;

  // Walk every candidate so that each spurious report carries its d.
  const CandidateSet candidates = candidate_set(leg, options.mode, options.interpretation);
  std::vector<Triple> produced;
  for (const auto& d : candidates.ds) {
    try {
      Triple t = triple_from_leg(leg, d);
      if (std::find(truth.begin(), truth.end(), t) == truth.end()) {
        entry.spurious.push_back({d, SpuriousReason::NotInOracle, t});
      }
      produced.push_back(std::move(t));
    } catch (const NonIntegerResult&) {
      entry.spurious.push_back({d, SpuriousReason::NonIntegerResult, std::nullopt});
    } catch (const DegenerateTriple&) {
      entry.spurious.push_back({d, SpuriousReason::DegenerateTriple, std::nullopt});
    }
  }

  for (const auto& t : truth) {
    if (std::find(produced.begin(), produced.end(), t) == produced.end()) {
      entry.missing.push_back(t);
    }
  }
  return entry;
}

DiscrepancyReport cross_check(LegRange range, const CrossCheckOptions& options) {
  if (range.first == 0) throw std::invalid_argument("leg range must start at 1 or above");
  if (range.last < range.first) throw std::invalid_argument("leg range is empty");
  if (range.last > options.sweep_limit) {
    throw std::out_of_range("range end " + std::to_string(range.last) + " exceeds sweep limit " +
                            std::to_string(options.sweep_limit));
  }

  const std::uint64_t count = range.last - range.first + 1;
  std::vector<std::optional<LegDiscrepancy>> slots(count);

  // Legs are claimed from a shared counter, largest first since cost grows as x^2.
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
        const std::uint64_t x = range.last - i;
        if (options.odd_only && x % 2 == 0) continue;
        slots[x - range.first] = compare_leg(x, options);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
  };

  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  DiscrepancyReport report;
  report.mode = options.mode;
  report.interpretation = options.interpretation;
  report.range = range;
  for (auto& slot : slots) {
    if (!slot) continue;
    ++report.legs_checked;
    if (!slot->empty()) report.entries.push_back(std::move(*slot));
  }
  return report;
}

DiscrepancyReport merge_reports(const DiscrepancyReport& a, const DiscrepancyReport& b) {
  if (a.mode != b.mode || a.interpretation != b.interpretation) {
    throw std::invalid_argument("cannot merge reports from different modes");
  }
  DiscrepancyReport out;
  out.mode = a.mode;
  out.interpretation = a.interpretation;
  out.range = {std::min(a.range.first, b.range.first), std::max(a.range.last, b.range.last)};
  out.legs_checked = a.legs_checked + b.legs_checked;
  out.entries.reserve(a.entries.size() + b.entries.size());
  std::merge(a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
             std::back_inserter(out.entries),
             [](const LegDiscrepancy& l, const LegDiscrepancy& r) { return l.x < r.x; });
  return out;
}

}  // namespace tripleforge
