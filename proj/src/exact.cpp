#include "commtuples/exact.hpp"

#include <stdexcept>

namespace commtuples {

char sign_char(Sign s) {
  switch (s) {
    case Sign::negative: return '-';
    case Sign::zero: return '0';
    case Sign::positive: return '+';
  }
  return '?';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '-': return Sign::negative;
    case '0': return Sign::zero;
    case '+': return Sign::positive;
    default: throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
  }
}

std::string sign_name(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "unknown";
}

Integer factorial(std::uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer ipow(std::uint64_t base, std::uint64_t exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Rational rpow(const Rational& base, std::uint64_t exponent) {
  return make_rational(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

bool is_integer(const Rational& v) { return v.get_den() == 1; }

}  // namespace commtuples
