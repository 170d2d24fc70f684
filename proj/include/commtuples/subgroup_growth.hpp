#pragma once

// Subgroup growth of Z^ell: g_ell(n) is the number of index-n subgroups.
//
// Two independent routes are provided:
//   * a Dirichlet-convolution sieve, g_ell(n) = sum_{d | n} d * g_{ell-1}(d),
//     iterated up from g_0 = [n == 1];
//   * the multiplicative route via the Gaussian-binomial prime-power values
//     g_ell(p^m) = prod_{i<m} (p^{ell+i} - 1) / prod_{i=1..m} (p^i - 1).

#include "commtuples/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace commtuples {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing
};

/// Trial division up to sqrt(n). Throws on n == 0.
Factorization factorize(std::uint64_t n);

/// All divisors of n in ascending order. Throws on n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Sum of divisors. Throws on n == 0.
std::uint64_t sigma(std::uint64_t n);

/// Table of g_ell(1..n_max). Index 0 is unused and holds zero.
class GSeries {
 public:
  GSeries(unsigned ell, std::vector<Integer> values);

  unsigned ell() const { return ell_; }
  std::size_t n_max() const { return values_.size() - 1; }

  const Integer& operator[](std::size_t n) const;
  const std::vector<Integer>& values() const { return values_; }

 private:
  unsigned ell_;
  std::vector<Integer> values_;
};

/// g_0 on 1..n_max.
GSeries g_base_layer(std::size_t n_max);

/// One sieve step: g_{ell} from g_{ell-1}.
GSeries g_next_layer(const GSeries& previous);

/// g_ell(1..n_max) by iterating the convolution from g_0.
GSeries g_table_by_recurrence(unsigned ell, std::size_t n_max);

/// g_ell(p^m). Hard failure (std::logic_error) if the division is not exact.
Integer g_prime_power(std::uint64_t p, unsigned m, unsigned ell);

/// g_ell(n) as a product over the prime-power factorization of n.
Integer g_multiplicative(std::uint64_t n, unsigned ell);

/// g_ell(1..n_max) filled entry by entry from g_multiplicative.
GSeries g_table_multiplicative(unsigned ell, std::size_t n_max);

/// CSV with columns n,g.
void write_csv(std::ostream& out, const GSeries& g);

}  // namespace commtuples
