#include "commtuples/bounds.hpp"

#include "commtuples/logconcavity.hpp"
#include "commtuples/partitions.hpp"

#include <stdexcept>
#include <string>

namespace commtuples {

namespace {

constexpr unsigned kBruteMax = 40;

void require_brute_range(unsigned n) {
  if (n < 2 || n > kBruteMax)
    throw std::invalid_argument("brute-force partition products limited to 2 <= n <= 40, got n=" +
                                std::to_string(n));
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer product_of(const Partition& parts) {
  Integer prod = 1;
  for (auto p : parts) prod *= p;
  return prod;
}

}  // namespace

MaxProduct max_product(unsigned n) {
  if (n < 2) throw std::invalid_argument("max_product: n must be >= 2");
  MaxProduct r;
  switch (n % 3) {
    case 0:
      r.m1 = ipow(3, n / 3);
      r.achieving_k = {n / 3};
      r.multiplicity = {Integer(1)};
      break;
    case 1:
      r.m1 = 4 * ipow(3, (n - 4) / 3);
      r.achieving_k = {(n - 1) / 3, (n + 2) / 3};
      r.multiplicity = {Integer((n - 1) / 3), binomial((n + 2) / 3, 2)};
      break;
    default:
      r.m1 = 2 * ipow(3, (n - 2) / 3);
      r.achieving_k = {(n + 1) / 3};
      r.multiplicity = {Integer((n + 1) / 3)};
      break;
  }
  return r;
}

std::vector<ProductCount> brute_max_products(unsigned n) {
  require_brute_range(n);
  std::map<Integer, std::uint64_t> counts;
  for_each_partition(n, [&](const Partition& parts) { ++counts[product_of(parts)]; });
  std::vector<ProductCount> out;
  out.reserve(counts.size());
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) out.push_back({it->first, it->second});
  return out;
}

std::map<unsigned, Integer> brute_maximizer_orderings(unsigned n) {
  require_brute_range(n);
  const Integer best = brute_max_products(n).front().product;
  std::map<unsigned, Integer> by_k;
  for_each_partition(n, [&](const Partition& parts) {
    if (product_of(parts) != best) return;
    const auto mult = part_multiplicities(parts, n);
    Integer orderings = factorial(parts.size());
    for (auto c : mult) orderings /= factorial(c);
    by_k[static_cast<unsigned>(parts.size())] += orderings;
  });
  return by_k;
}

Integer second_growth_base(unsigned n) {
  if (n < 3) throw std::invalid_argument("second_growth_base: n must be >= 3");
  switch (n) {
    case 3: return 2;
    case 4: return 3;
    case 5: return 5;
    case 7: return 10;
    default: break;
  }
  switch (n % 3) {
    case 0: return 8 * ipow(3, (n - 6) / 3);
    case 1: return 32 * ipow(3, (n - 10) / 3);
    default: return 16 * ipow(3, (n - 8) / 3);
  }
}

Integer third_growth_base(unsigned n) {
  if (n != 20) throw std::invalid_argument("third_growth_base: only n = 20 is available");
  return 5 * ipow(3, 5);
}

Rational leading_coefficient(unsigned n) {
  if (n < 2) throw std::invalid_argument("leading_coefficient: n must be >= 2");
  switch (n % 3) {
    case 0: {
      const unsigned j = n / 3;
      return make_rational(1, ipow(2, j) * factorial(j));
    }
    case 1: {
      const unsigned j = (n - 4) / 3;
      return make_rational(7, 6 * ipow(2, j) * factorial(j));
    }
    default: {
      const unsigned j = (n - 2) / 3;
      return make_rational(1, ipow(2, j) * factorial(j));
    }
  }
}

Rational second_coefficient(unsigned n) {
  switch (n) {
    case 19: return make_rational(41, factorial(6) * 8);
    case 20: return make_rational(43, factorial(4) * factorial(4) * factorial(3) * 8);
    case 21: return make_rational(1, factorial(3) * factorial(4) * 32);
    default:
      throw std::invalid_argument("second_coefficient: only n in {19, 20, 21}, got n=" +
                                  std::to_string(n));
  }
}

GrowthProfile growth_profile(unsigned n) {
  GrowthProfile g;
  g.n = n;
  g.max = max_product(n);
  g.c1 = leading_coefficient(n);
  if (n >= 3) g.m2 = second_growth_base(n);
  if (n >= 19 && n <= 21) g.c2 = second_coefficient(n);
  if (n == 20) g.m3 = third_growth_base(n);
  return g;
}

SandwichReport sandwich_check(unsigned ell, unsigned n, const NSeries& series,
                              SandwichUpper upper) {
  if (ell < 2 || n < 3) throw std::invalid_argument("sandwich_check: needs ell >= 2 and n >= 3");
  const Rational lead = leading_coefficient(n) * Rational(ipow(max_product(n).m1, ell - 1));
  const Integer p_n = partition_table(n)[n];
  const Integer m2 = second_growth_base(n);
  const Integer tail = upper == SandwichUpper::power ? p_n * ipow(m2, ell - 1) : Integer(p_n * m2);
  const Rational value = series.value(n);
  return {lead <= value, value <= lead + Rational(tail)};
}

Sign certified_sign(unsigned n) {
  switch (n % 3) {
    case 0: return Sign::positive;
    case 1: return Sign::negative;
    default: return n < 20 ? Sign::positive : Sign::negative;
  }
}

namespace {

struct LinearArgument {
  Rational base;
  Rational argument;
  unsigned slope;  // kappa = 1 + slope * (argument - 1)
};

// Logarithm argument for every n except n = 2.
LinearArgument threshold_argument(unsigned n, N20Constant variant) {
  const Rational nine_eighths = make_rational(9, 8);
  if (n % 3 == 0) {
    const auto p = partition_table(n + 1);
    const Integer f = factorial(n / 3);
    return {nine_eighths, Rational(f * f * p[n - 1] * p[n + 1] * ipow(3, 2 * n / 3)), 8};
  }
  if (n % 3 == 1) {
    const auto p = partition_table(n);
    const Integer t = factorial((n - 1) / 3) * p[n];
    return {nine_eighths, Rational(t * t * 2 * ipow(3, 2 * (n - 1) / 3)), 8};
  }
  if (n <= 17) {
    const auto p = partition_table(n + 1);
    return {nine_eighths,
            Rational(71 * ipow(2, (n + 1) / 3) * factorial((n + 1) / 3) * p[n + 1]), 8};
  }
  if (n == 20) {
    const Integer p20 = partition_table(20)[20];
    const Rational c = variant == N20Constant::published
                           ? make_rational(1, factorial(6) * ipow(2, 6))
                           : second_coefficient(20);
    const Rational scale =
        make_rational(factorial(3) * factorial(6) * factorial(7) * ipow(2, 10), 211);
    const Rational inner = (c + p20) * (c + p20) + make_rational(p20, factorial(6) * ipow(2, 5));
    return {make_rational(16, 15), Rational(scale * inner), 15};
  }
  const auto p = partition_table(n);
  return {nine_eighths,
          Rational(97 * ipow(2, (n - 2) / 3) * factorial((n - 2) / 3) * p[n]), 8};
}

}  // namespace

ThresholdBound kappa(unsigned n) {
  if (n < 2) throw std::invalid_argument("kappa: n must be >= 2");
  ThresholdBound b;
  b.n = n;
  b.kind = ThresholdKind::kappa;
  b.certified_sign = certified_sign(n);
  if (n == 2) {
    b.value_ceiling = 2;
    b.argument = 2;
    return b;
  }
  const auto arg = threshold_argument(n, N20Constant::published);
  b.base = arg.base;
  b.argument = arg.argument;
  b.value_ceiling = ceil(Rational(1) + Rational(arg.slope) * (arg.argument - 1));
  return b;
}

std::uint64_t least_exponent_reaching(const Rational& base, const Rational& target) {
  if (base <= 1) throw std::invalid_argument("least_exponent_reaching: base must exceed 1");
  if (target <= 1) return 0;
  std::uint64_t hi = 1;
  while (rpow(base, hi) < target) hi *= 2;
  std::uint64_t lo = hi / 2;  // base^lo < target whenever lo > 0
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (rpow(base, mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

ThresholdBound L_threshold(unsigned n, N20Constant variant) {
  if (n < 1) throw std::invalid_argument("L_threshold: n must be >= 1");
  ThresholdBound b;
  b.n = n;
  b.kind = ThresholdKind::L;
  b.certified_sign = certified_sign(n);
  if (n == 2) {
    b.value_ceiling = 2;
    b.base = make_rational(9, 8);
    b.argument = 1;
    return b;
  }
  const auto arg = threshold_argument(n, variant);
  b.base = arg.base;
  b.argument = arg.argument;
  b.value_ceiling = 1 + Integer(static_cast<unsigned long>(
                            least_exponent_reaching(arg.base, arg.argument)));
  return b;
}

TheoremCheck verify_theorem_sign(unsigned n, const ThresholdBound& bound,
                                 const SeriesProvider& provider) {
  if (!bound.value_ceiling.fits_uint_p())
    throw std::invalid_argument("verify_theorem_sign: threshold too large to evaluate");
  TheoremCheck c;
  c.n = n;
  c.ell = static_cast<unsigned>(bound.value_ceiling.get_ui());
  c.expected = bound.certified_sign;
  c.observed = delta_sign(n, provider(c.ell, n + 1));
  return c;
}

}  // namespace commtuples
