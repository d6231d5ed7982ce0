#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tripleforge/integer.hpp"

namespace tripleforge {

// A Pythagorean triple (x, y, z) built around the prescribed leg x, with
// generator d = z - y.
class Triple {
 public:
  // Validates x^2 + y^2 = z^2, z - y = d and positivity. Throws
  // std::invalid_argument otherwise.
  Triple(Integer x, Integer y, Integer z);

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  const Integer& z() const { return z_; }
  const Integer& d() const { return d_; }
  bool primitive() const { return primitive_; }

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }

 private:
  Integer x_, y_, z_, d_;
  bool primitive_ = false;
};

bool is_primitive(const Triple& t);

enum class Mode { PaperStrict, Corrected };

// How l ranges in P(x) = { 2^s * l : l | x^2, 1 <= s <= v2(x) - 1 }.
enum class LInterpretation { AnyDivisor, OddDivisor };

std::string_view to_string(Mode mode);
std::string_view to_string(LInterpretation interp);

struct CandidateSet {
  Integer x;
  Mode mode = Mode::Corrected;
  // Only meaningful in paper-strict mode for even x.
  LInterpretation interpretation = LInterpretation::OddDivisor;
  std::vector<Integer> ds;
};

// Divisors d of x^2 with d <= x (inclusive, as printed).
std::vector<Integer> divisor_set_D(const Integer& x);

// Raw P(x) for even x; throws std::invalid_argument for odd x.
std::vector<Integer> paper_set_P(const Integer& x, LInterpretation interp);

CandidateSet candidate_set(const Integer& x, Mode mode,
                           LInterpretation interp = LInterpretation::OddDivisor);

class TripleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// x^2/d and d differ in parity, so y and z would be half-integers.
class NonIntegerResult : public TripleError {
 public:
  using TripleError::TripleError;
};

// d >= x, so y <= 0.
class DegenerateTriple : public TripleError {
 public:
  using TripleError::TripleError;
};

// Evaluates y = (x^2/d - d)/2, z = (x^2/d + d)/2. Throws std::invalid_argument
// if d does not divide x^2.
Triple triple_from_leg(const Integer& x, const Integer& d);

enum class FailureKind { NonIntegerResult, DegenerateTriple };

std::string_view to_string(FailureKind kind);

struct CandidateFailure {
  Integer d;
  FailureKind kind;

  friend bool operator==(const CandidateFailure&, const CandidateFailure&) = default;
};

struct LegEnumeration {
  // Ascending y.
  std::vector<Triple> triples;
  // Candidates that could not produce a triple; ascending d.
  std::vector<CandidateFailure> failures;
};

LegEnumeration enumerate_leg(const Integer& x, Mode mode,
                             LInterpretation interp = LInterpretation::OddDivisor);

// The triples of enumerate_leg without the failure log.
std::vector<Triple> triples_with_leg(const Integer& x, Mode mode,
                                     LInterpretation interp = LInterpretation::OddDivisor);

}  // namespace tripleforge
