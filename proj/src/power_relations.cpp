#include "tripleforge/power_relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace tripleforge {

namespace {

void require_odd_leg(const Integer& x) {
  if (is_even(x)) throw std::invalid_argument("power relations need an odd leg, got " + to_decimal(x));
  if (x < 3) throw std::invalid_argument("power relations need a leg >= 3, got " + to_decimal(x));
}

void require_exponent(unsigned long m) {
  if (m == 0) throw std::invalid_argument("exponent m must be >= 1");
}

}  // namespace

Triple base_triple(const Integer& x) {
  require_odd_leg(x);
  const Integer square = x * x;
  return Triple(x, (square - 1) / 2, (square + 1) / 2);
}

Triple power_triple(const Integer& x, unsigned long m) {
  require_odd_leg(x);
  require_exponent(m);
  const Integer leg = pow(x, m);
  const Integer square = leg * leg;
  return Triple(leg, (square - 1) / 2, (square + 1) / 2);
}

Integer geometric_factor(const Integer& x, unsigned long m) {
  require_odd_leg(x);
  require_exponent(m);
  const Integer step = x * x;
  Integer acc = 1;
  for (unsigned long i = 1; i < m; ++i) acc = acc * step + 1;
  return acc;
}

Integer alternating_factor(const Integer& x, unsigned long m) {
  require_odd_leg(x);
  require_exponent(m);
  // Leading coefficient is +1; lower coefficients alternate downwards.
  const Integer step = x * x;
  Integer acc = 1;
  for (unsigned long i = 1; i < m; ++i) acc = acc * step + (i % 2 == 1 ? -1 : 1);
  return acc;
}

std::string_view to_string(RelationPath path) {
  switch (path) {
    case RelationPath::Direct:
      return "direct";
    case RelationPath::GeometricSum:
      return "eq2.1";
    case RelationPath::AlternatingSum:
      return "eq2.2-2.3";
    case RelationPath::Equivalent:
      return "equivalent";
  }
  return "?";
}

const PathValue& PowerRelationReport::path(RelationPath which) const {
  auto it = std::find_if(paths.begin(), paths.end(),
                         [which](const PathValue& v) { return v.path == which; });
  if (it == paths.end()) throw std::out_of_range("relation path not computed");
  return *it;
}

PowerRelationReport relate(const Integer& x, unsigned long m) {
  require_odd_leg(x);
  require_exponent(m);

  Triple base = base_triple(x);
  Integer geometric = geometric_factor(x, m);
  Integer alternating = alternating_factor(x, m);
  const Integer& y = base.y();
  const Integer& z = base.z();

  std::vector<PathValue> paths;
  paths.reserve(kRelationPaths.size());

  {
    const Triple direct = power_triple(x, m);
    paths.push_back({RelationPath::Direct, direct.y(), direct.z()});
  }
  {
    Integer yp = y * geometric;
    Integer zp = yp + 1;
    paths.push_back({RelationPath::GeometricSum, std::move(yp), std::move(zp)});
  }
  {
    // The bracket lands on y' for even m and on z' for odd m; the other member
    // follows by adding (-1)^(m-2).
    const Integer v = z * alternating;
    const int shift = m % 2 == 0 ? 1 : -1;
    if (m % 2 == 0) {
      paths.push_back({RelationPath::AlternatingSum, v, v + shift});
    } else {
      paths.push_back({RelationPath::AlternatingSum, v + shift, v});
    }
  }
  {
    Integer zp = z + y * (geometric - 1);
    Integer yp = zp - 1;
    paths.push_back({RelationPath::Equivalent, std::move(yp), std::move(zp)});
  }

  const PathValue& direct = paths.front();
  const bool agreed = std::all_of(paths.begin(), paths.end(), [&](const PathValue& p) {
    return p.y_prime == direct.y_prime && p.z_prime == direct.z_prime;
  });

  Integer y_prime = direct.y_prime;
  Integer z_prime = direct.z_prime;
  return PowerRelationReport{x,
                             m,
                             std::move(base),
                             std::move(geometric),
                             std::move(alternating),
                             std::move(y_prime),
                             std::move(z_prime),
                             std::move(paths),
                             agreed};
}

}  // namespace tripleforge
