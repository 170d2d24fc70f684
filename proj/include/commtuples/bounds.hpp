#pragma once

// Growth constants of N_ell(n) in ell for fixed n, and the explicit
// thresholds past which the sign of Delta_ell(n) is fixed by n mod 3.
//
//   M1(n)  maximal product of parts over partitions of n
//   M2(n)  base of the second growth term (second largest product)
//   C1(n)  leading coefficient: N_ell(n) ~ C1(n) * M1(n)^(ell-1)
//   kappa  linear-in-argument threshold
//   L      logarithmic threshold; ceil(L(n)) is computed by exact search

#include "commtuples/commuting_counts.hpp"
#include "commtuples/exact.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace commtuples {

struct MaxProduct {
  Integer m1;
  std::vector<unsigned> achieving_k;  // ascending
  std::vector<Integer> multiplicity;  // ordered tuples reaching m1, per achieving_k entry
};

/// Closed form for M1(n) and its maximizers. n >= 2.
MaxProduct max_product(unsigned n);

struct ProductCount {
  Integer product;
  std::uint64_t partitions;  // partitions of n with this product
};

/// Every distinct product of parts over the partitions of n, descending.
/// Exhaustive; 2 <= n <= 40.
std::vector<ProductCount> brute_max_products(unsigned n);

/// For the partitions reaching the maximal product: number of parts k ->
/// number of ordered k-tuples (compositions) with that product. 2 <= n <= 40.
std::map<unsigned, Integer> brute_maximizer_orderings(unsigned n);

/// M2(n), n >= 3.
Integer second_growth_base(unsigned n);

/// M3(20) = 5 * 3^5; other n are rejected.
Integer third_growth_base(unsigned n);

/// C1(n), n >= 2.
Rational leading_coefficient(unsigned n);

/// C2(n) for n in {19, 20, 21}.
Rational second_coefficient(unsigned n);

struct GrowthProfile {
  unsigned n = 0;
  MaxProduct max;
  std::optional<Integer> m2;
  Rational c1;
  std::optional<Rational> c2;
  std::optional<Integer> m3;
};

GrowthProfile growth_profile(unsigned n);

/// Which upper term is used in the C1/M2 sandwich.
enum class SandwichUpper {
  power,    // B + p(n) * M2^(ell-1)
  literal,  // B + p(n) * M2
};

struct SandwichReport {
  bool lower_holds = false;
  bool upper_holds = false;
  bool holds() const { return lower_holds && upper_holds; }
};

/// B_ell(n) <= N_ell(n) <= B_ell(n) + p(n) * M2(n)^(ell-1), with
/// B_ell(n) = C1(n) * M1(n)^(ell-1). ell >= 2, n >= 3.
SandwichReport sandwich_check(unsigned ell, unsigned n, const NSeries& series,
                              SandwichUpper upper = SandwichUpper::power);

enum class ThresholdKind { kappa, L };

/// Variant of the constant entering the n = 20 threshold.
enum class N20Constant {
  published,   // 1/(6! 2^6); reproduces the published ceil(L(20)) = 487
  proof_text,  // C2(20) = 43/(4! 4! 3! 2^3)
};

struct ThresholdBound {
  unsigned n = 0;
  ThresholdKind kind = ThresholdKind::L;
  Integer value_ceiling;  // Delta has certified_sign for all ell >= value_ceiling
  Sign certified_sign = Sign::positive;
  Rational base;      // growth ratio the threshold is a logarithm to (L only)
  Rational argument;  // argument of the logarithm / of the linear bound
};

/// Sign of Delta_ell(n) for all large ell, by n mod 3.
Sign certified_sign(unsigned n);

/// kappa(n) rounded up, n >= 2.
ThresholdBound kappa(unsigned n);

/// ceil(L(n)), n >= 1, by exact search on rational powers.
ThresholdBound L_threshold(unsigned n, N20Constant variant = N20Constant::published);

/// Least e >= 0 with base^e >= target. base > 1.
std::uint64_t least_exponent_reaching(const Rational& base, const Rational& target);

using SeriesProvider = std::function<NSeries(unsigned ell, std::size_t n_max)>;

struct TheoremCheck {
  unsigned n = 0;
  unsigned ell = 0;
  Sign observed = Sign::zero;
  Sign expected = Sign::zero;
  bool pass() const { return observed == expected; }
};

/// Evaluates Delta at ell = bound.value_ceiling and compares with the
/// certified sign.
TheoremCheck verify_theorem_sign(unsigned n, const ThresholdBound& bound,
                                 const SeriesProvider& provider = n_series);

}  // namespace commtuples
