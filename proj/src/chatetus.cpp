#include "tripleforge/chatetus.hpp"

#include <algorithm>
#include <iterator>

#include "tripleforge/factorization.hpp"

namespace tripleforge {

namespace {

void require_positive(const Integer& v, const char* what) {
  if (sgn(v) <= 0) throw std::invalid_argument(std::string(what) + " must be a positive integer");
}

// Divisors of x^2 from the factorization of x with doubled exponents.
std::vector<Integer> square_divisors(const Integer& x) {
  return divisors(factorize(x).power(2));
}

}  // namespace

Triple::Triple(Integer x, Integer y, Integer z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (sgn(x_) <= 0 || sgn(y_) <= 0 || sgn(z_) <= 0) {
    throw std::invalid_argument("triple members must be positive");
  }
  if (x_ * x_ + y_ * y_ != z_ * z_) {
    throw std::invalid_argument("not a Pythagorean triple: " + to_decimal(x_) + ", " +
                                to_decimal(y_) + ", " + to_decimal(z_));
  }
  d_ = z_ - y_;
  primitive_ = gcd(x_, y_) == 1;
}

bool is_primitive(const Triple& t) { return gcd(t.x(), t.y()) == 1; }

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::PaperStrict:
      return "paper-strict";
    case Mode::Corrected:
      return "corrected";
  }
  return "?";
}

std::string_view to_string(LInterpretation interp) {
  switch (interp) {
    case LInterpretation::AnyDivisor:
      return "any-l";
    case LInterpretation::OddDivisor:
      return "odd-l";
  }
  return "?";
}

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::NonIntegerResult:
      return "NonIntegerResult";
    case FailureKind::DegenerateTriple:
      return "DegenerateTriple";
  }
  return "?";
}

std::vector<Integer> divisor_set_D(const Integer& x) {
  require_positive(x, "leg");
  std::vector<Integer> ds = square_divisors(x);
  ds.erase(std::upper_bound(ds.begin(), ds.end(), x), ds.end());
  return ds;
}

std::vector<Integer> paper_set_P(const Integer& x, LInterpretation interp) {
  require_positive(x, "leg");
  if (is_odd(x)) throw std::invalid_argument("P(x) is defined for even x only");

  const unsigned long n = valuation2(x);
  std::vector<Integer> ls = square_divisors(x);
  if (interp == LInterpretation::OddDivisor) {
    std::erase_if(ls, [](const Integer& l) { return is_even(l); });
  }

  std::vector<Integer> out;
  for (unsigned long s = 1; s + 1 <= n; ++s) {
    Integer scale;
    mpz_setbit(scale.get_mpz_t(), s);
    for (const auto& l : ls) out.push_back(scale * l);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CandidateSet candidate_set(const Integer& x, Mode mode, LInterpretation interp) {
  require_positive(x, "leg");
  CandidateSet c{x, mode, interp, {}};

  if (mode == Mode::PaperStrict) {
    c.ds = divisor_set_D(x);
    if (is_even(x)) {
      const std::vector<Integer> p = paper_set_P(x, interp);
      std::vector<Integer> both;
      std::set_intersection(c.ds.begin(), c.ds.end(), p.begin(), p.end(), std::back_inserter(both));
      c.ds = std::move(both);
    }
    return c;
  }

  const Integer square = x * x;
  for (auto& d : square_divisors(x)) {
    if (d >= x) break;
    if (is_odd(square / d) == is_odd(d)) c.ds.push_back(std::move(d));
  }
  return c;
}

Triple triple_from_leg(const Integer& x, const Integer& d) {
  require_positive(x, "leg");
  require_positive(d, "generator");
  const Integer square = x * x;
  if (!mpz_divisible_p(square.get_mpz_t(), d.get_mpz_t())) {
    throw std::invalid_argument(to_decimal(d) + " does not divide " + to_decimal(square));
  }
  const Integer cofactor = square / d;
  if (is_odd(cofactor) != is_odd(d)) {
    throw NonIntegerResult("x=" + to_decimal(x) + ", d=" + to_decimal(d) +
                           ": x^2/d and d differ in parity");
  }
  if (d >= x) {
    throw DegenerateTriple("x=" + to_decimal(x) + ", d=" + to_decimal(d) + ": y would be <= 0");
  }
  Integer y = (cofactor - d) / 2;
  Integer z = (cofactor + d) / 2;
  return Triple(x, std::move(y), std::move(z));
}

LegEnumeration enumerate_leg(const Integer& x, Mode mode, LInterpretation interp) {
  LegEnumeration out;
  for (const auto& d : candidate_set(x, mode, interp).ds) {
    try {
      out.triples.push_back(triple_from_leg(x, d));
    } catch (const NonIntegerResult&) {
      out.failures.push_back({d, FailureKind::NonIntegerResult});
    } catch (const DegenerateTriple&) {
      out.failures.push_back({d, FailureKind::DegenerateTriple});
    }
  }
  std::sort(out.triples.begin(), out.triples.end(),
            [](const Triple& a, const Triple& b) { return a.y() < b.y(); });
  return out;
}

std::vector<Triple> triples_with_leg(const Integer& x, Mode mode, LInterpretation interp) {
  return enumerate_leg(x, mode, interp).triples;
}

}  // namespace tripleforge
