#pragma once

// Normalized counts N_ell(n) = |{commuting ell-tuples in S_n}| / n!.
//
// The generating function sum_n N_ell(n) t^n = exp(sum_m g_ell(m) t^m / m)
// yields the main recurrence
//
//     n * N_ell(n) = sum_{k=1..n} g_ell(k) * N_ell(n-k),   N_ell(0) = 1,
//
// where the division by n is exact for ell >= 1. For ell = 0 the series is
// exp(t), so N_0(n) = 1/n! and values are kept as exact rationals.

#include "commtuples/exact.hpp"
#include "commtuples/subgroup_growth.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace commtuples {

class NSeries {
 public:
  /// Integral series (ell >= 1).
  NSeries(unsigned ell, std::vector<Integer> values);
  /// Rational series (ell == 0).
  NSeries(unsigned ell, std::vector<Rational> values);

  unsigned ell() const { return ell_; }
  std::size_t n_max() const { return integral_ ? ints_.size() - 1 : rats_.size() - 1; }
  bool integral() const { return integral_; }

  /// Only valid on integral series.
  const Integer& integer(std::size_t n) const;
  Rational value(std::size_t n) const;

  const std::vector<Integer>& integers() const { return ints_; }

 private:
  unsigned ell_;
  bool integral_;
  std::vector<Integer> ints_;
  std::vector<Rational> rats_;
};

/// N_ell(0..n_max) by the exact-division recurrence. Requires g.ell() == ell
/// and g to cover 1..n_max. Throws std::logic_error if a division is inexact.
NSeries n_table(unsigned ell, std::size_t n_max, const GSeries& g);

/// Convenience: builds g_ell by the sieve and runs n_table.
NSeries n_series(unsigned ell, std::size_t n_max);

/// N_ell(n) as the sum over partitions of n of prod_m (g(m)/m)^{c_m} / c_m!,
/// i.e. the ordered-composition sum grouped by multiset.
Rational n_value_by_partition_sum(unsigned ell, std::size_t n, const GSeries& g);

/// Coefficients of the degree-n polynomial P_n(x) = [t^n] exp(x * sum g(m) t^m / m).
struct OrbifoldPolynomial {
  unsigned ell = 0;
  std::size_t n = 0;
  std::vector<Rational> coeffs;  // coeffs[k] multiplies x^k

  std::size_t degree() const;
  Rational evaluate(const Rational& x) const;
};

/// P_0..P_{n_max} at once; each is read off the powers G(t)^j / j!.
std::vector<OrbifoldPolynomial> orbifold_polynomials(unsigned ell, std::size_t n_max,
                                                     const GSeries& g);
OrbifoldPolynomial orbifold_polynomial(unsigned ell, std::size_t n, const GSeries& g);

/// p(0..n_max) by Euler's pentagonal-number recurrence.
std::vector<Integer> partition_table(std::size_t n_max);

/// Lower bound A_ell(n) of N_ell(n) (ell >= 2). The n = 1 (mod 3) branch
/// needs n >= 4; n = 1 is rejected.
Rational a_lower_bound(unsigned ell, std::size_t n);

/// CSV with columns n,N.
void write_csv(std::ostream& out, const NSeries& series);

}  // namespace commtuples
