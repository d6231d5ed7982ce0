#include "tripleforge/factorization.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace tripleforge {

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite m.
Integer pollard_brent(const Integer& m) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys, t;
    const unsigned long batch = 128;
    unsigned long r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
          step(y);
          t = abs(x - y);
          q = q * t;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
        }
        g = gcd(q, m);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);

    if (g == m) {
      // Batched product collapsed; replay one step at a time.
      do {
        step(ys);
        g = gcd(abs(x - ys), m);
      } while (g == 1);
    }
    if (g != m) return g;
  }
}

void split_cofactor(const Integer& m, std::map<Integer, unsigned long>& out) {
  if (m == 1) return;
  if (is_probable_prime(m)) {
    ++out[m];
    return;
  }
  if (integer_sqrt(m).exact) {
    // Squares split directly.
    Integer r = integer_sqrt(m).root;
    split_cofactor(r, out);
    split_cofactor(r, out);
    return;
  }
  Integer d = pollard_brent(m);
  split_cofactor(d, out);
  split_cofactor(m / d, out);
}

}  // namespace

Integer Factorization::product() const {
  Integer p = 1;
  for (const auto& f : factors_) p *= pow(f.prime, f.exponent);
  return p;
}

Factorization Factorization::power(unsigned long k) const {
  std::vector<PrimePower> scaled = factors_;
  if (k == 0) scaled.clear();
  for (auto& f : scaled) f.exponent *= k;
  return Factorization(pow(n_, k), std::move(scaled));
}

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  Integer n = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].exponent == 0) throw std::invalid_argument("zero exponent in factorization");
    if (!is_probable_prime(factors[i].prime)) {
      throw std::invalid_argument("non-prime " + to_decimal(factors[i].prime) + " in factorization");
    }
    if (i > 0 && !(factors[i - 1].prime < factors[i].prime)) {
      throw std::invalid_argument("factorization primes must be strictly increasing");
    }
    n *= pow(factors[i].prime, factors[i].exponent);
  }
  return Factorization(std::move(n), std::move(factors));
}

Factorization factorize(const Integer& n, const FactorOptions& options) {
  if (sgn(n) <= 0) throw std::domain_error("factorize requires n >= 1");

  std::map<Integer, unsigned long> found;
  Integer rest = n;

  unsigned long twos = mpz_scan1(rest.get_mpz_t(), 0);
  if (twos > 0) {
    found[2] = twos;
    mpz_tdiv_q_2exp(rest.get_mpz_t(), rest.get_mpz_t(), twos);
  }

  const bool unbounded = !options.pollard_rho;
  for (std::uint64_t p = 3; rest > 1; p += 2) {
    if (!unbounded && p > options.trial_bound) break;
    if (Integer(p) * p > rest) {
      ++found[rest];
      rest = 1;
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned long e = 0;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
      found[Integer(p)] += e;
    }
  }
  split_cofactor(rest, found);

  std::vector<PrimePower> factors;
  factors.reserve(found.size());
  for (auto& [p, e] : found) factors.push_back({p, e});
  return Factorization(n, std::move(factors));
}

std::vector<Integer> divisors(const Factorization& f) {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    out.reserve(base * (e + 1));
    Integer scale = 1;
    for (unsigned long i = 1; i <= e; ++i) {
      scale *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * scale);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long valuation2(const Integer& n) {
  if (sgn(n) <= 0) throw std::domain_error("2-adic valuation requires n >= 1");
  return mpz_scan1(n.get_mpz_t(), 0);
}

TwoAdic two_adic(const Integer& n) {
  TwoAdic t;
  t.n = n;
  t.s = valuation2(n);
  mpz_tdiv_q_2exp(t.k.get_mpz_t(), n.get_mpz_t(), t.s);
  return t;
}

bool is_probable_prime(const Integer& n) {
  // GMP probable-prime test, 30 rounds.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

SquareRoot integer_sqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("integer_sqrt of a negative value");
  if (n == 0) return {Integer(0), true};

  // Start at a power of two not below sqrt(n); Newton steps then decrease
  // monotonically until they reach floor(sqrt(n)).
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  for (;;) {
    Integer y = (x + n / x) / 2;
    if (y >= x) break;
    x = std::move(y);
  }
  return {x, x * x == n};
}

std::pair<std::uint64_t, bool> integer_sqrt(std::uint64_t n) {
  if (n == 0) return {0, true};
  const int bits = std::bit_width(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    std::uint64_t y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return {x, x * x == n};
}

}  // namespace tripleforge
