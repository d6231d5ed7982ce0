#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tripleforge/integer.hpp"

namespace tripleforge {

struct FactorOptions {
  // Trial division runs over candidates up to this bound before handing the
  // cofactor to Pollard rho.
  std::uint64_t trial_bound = 1u << 16;
  // When false, trial division continues up to the square root of the cofactor.
  bool pollard_rho = true;
};

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete prime factorization of n. Primes are strictly increasing and the
// factor list of 1 is empty.
class Factorization {
 public:
  Factorization() : n_(1) {}

  const Integer& n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  // Product over prime^exponent. Equals n() for any value produced by factorize().
  Integer product() const;

  // Factorization of n^k, obtained by scaling exponents.
  Factorization power(unsigned long k) const;

  // Builds from an explicit list; validates ordering, exponents and primality.
  static Factorization from_factors(std::vector<PrimePower> factors);

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  Factorization(Integer n, std::vector<PrimePower> factors)
      : n_(std::move(n)), factors_(std::move(factors)) {}

  Integer n_;
  std::vector<PrimePower> factors_;

  friend Factorization factorize(const Integer&, const FactorOptions&);
};

// Throws std::domain_error for n = 0.
Factorization factorize(const Integer& n, const FactorOptions& options = {});

// Strictly increasing list of every divisor of f.n().
std::vector<Integer> divisors(const Factorization& f);

// n = 2^s * k with k odd.
struct TwoAdic {
  Integer n;
  unsigned long s = 0;
  Integer k;
};

TwoAdic two_adic(const Integer& n);

// v2(n) for n >= 1.
unsigned long valuation2(const Integer& n);

bool is_probable_prime(const Integer& n);

struct SquareRoot {
  Integer root;
  bool exact = false;
};

// floor(sqrt(n)) by integer Newton iteration; exact iff root^2 == n.
// Throws std::domain_error for negative n.
SquareRoot integer_sqrt(const Integer& n);

// Same contract on machine words.
std::pair<std::uint64_t, bool> integer_sqrt(std::uint64_t n);

}  // namespace tripleforge
