#include "tripleforge/integer.hpp"

#include <stdexcept>

namespace tripleforge {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a nonnegative decimal integer: '" + std::string(text) + "'");
    }
  }
  return Integer(std::string(text), 10);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

}  // namespace tripleforge
