#pragma once

#include <array>
#include <string_view>

#include "tripleforge/chatetus.hpp"
#include "tripleforge/integer.hpp"

namespace tripleforge {

// The d = 1 triple on odd leg x >= 3: (x, (x^2-1)/2, (x^2+1)/2).
Triple base_triple(const Integer& x);

// The d = 1 triple on leg x^m, evaluated directly from x^(2m).
Triple power_triple(const Integer& x, unsigned long m);

// 1 + x^2 + x^4 + ... + x^(2(m-1)), accumulated by Horner's rule.
Integer geometric_factor(const Integer& x, unsigned long m);

// (-1)^(m-1) + sum_{p=1}^{m-1} (-1)^(m-1-p) x^(2p), accumulated by Horner's rule.
Integer alternating_factor(const Integer& x, unsigned long m);

// Independent routes to (y', z') for the power leg x^m.
enum class RelationPath {
  Direct,          // (x^(2m) -/+ 1) / 2
  GeometricSum,    // y * geometric_factor
  AlternatingSum,  // z * alternating_factor, routed to y' or z' by the parity of m
  Equivalent,      // z + y * (geometric_factor - 1), shifted by one for y'
};

inline constexpr std::array<RelationPath, 4> kRelationPaths = {
    RelationPath::Direct, RelationPath::GeometricSum, RelationPath::AlternatingSum,
    RelationPath::Equivalent};

// Stable labels used in reports: direct, eq2.1, eq2.2-2.3, equivalent.
std::string_view to_string(RelationPath path);

struct PathValue {
  RelationPath path;
  Integer y_prime;
  Integer z_prime;

  friend bool operator==(const PathValue&, const PathValue&) = default;
};

struct PowerRelationReport {
  Integer x;
  unsigned long m = 0;
  Triple base;
  Integer geometric_factor;
  Integer alternating_factor;
  Integer y_prime;
  Integer z_prime;
  // One entry per RelationPath, in kRelationPaths order.
  std::vector<PathValue> paths;
  bool agreed = false;

  const PathValue& path(RelationPath which) const;
};

// Computes every path and checks exact agreement. y_prime/z_prime come from
// the direct path. Throws std::invalid_argument unless x is odd, x >= 3 and m >= 1.
PowerRelationReport relate(const Integer& x, unsigned long m);

}  // namespace tripleforge
