#include "commtuples/commuting_counts.hpp"

#include "commtuples/partitions.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace commtuples {

NSeries::NSeries(unsigned ell, std::vector<Integer> values)
    : ell_(ell), integral_(true), ints_(std::move(values)) {
  if (ints_.empty()) throw std::invalid_argument("NSeries: empty");
}

NSeries::NSeries(unsigned ell, std::vector<Rational> values)
    : ell_(ell), integral_(false), rats_(std::move(values)) {
  if (rats_.empty()) throw std::invalid_argument("NSeries: empty");
}

const Integer& NSeries::integer(std::size_t n) const {
  if (!integral_) throw std::logic_error("NSeries: ell = 0 series has rational entries");
  if (n >= ints_.size())
    throw std::out_of_range("NSeries: index " + std::to_string(n) + " beyond n_max " +
                            std::to_string(n_max()));
  return ints_[n];
}

Rational NSeries::value(std::size_t n) const {
  if (integral_) return Rational(integer(n));
  if (n >= rats_.size())
    throw std::out_of_range("NSeries: index " + std::to_string(n) + " beyond n_max " +
                            std::to_string(n_max()));
  return rats_[n];
}

namespace {

void check_cover(unsigned ell, std::size_t n_max, const GSeries& g) {
  if (g.ell() != ell)
    throw std::invalid_argument("g table is for ell=" + std::to_string(g.ell()) +
                                ", expected ell=" + std::to_string(ell));
  if (g.n_max() < n_max)
    throw std::invalid_argument("g table covers 1.." + std::to_string(g.n_max()) +
                                ", need 1.." + std::to_string(n_max));
}

}  // namespace

NSeries n_table(unsigned ell, std::size_t n_max, const GSeries& g) {
  if (n_max >= 1) check_cover(ell, n_max, g);
  const auto& gv = g.values();

  if (ell == 0) {
    std::vector<Rational> values(n_max + 1);
    values[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
      Rational acc = 0;
      for (std::size_t k = 1; k <= n; ++k)
        if (gv[k] != 0) acc += Rational(gv[k]) * values[n - k];
      acc /= Rational(static_cast<unsigned long>(n));
      values[n] = acc;
    }
    return NSeries(ell, std::move(values));
  }

  std::vector<Integer> values(n_max + 1);
  values[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n <= n_max; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      mpz_addmul(acc.get_mpz_t(), gv[k].get_mpz_t(), values[n - k].get_mpz_t());
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), n))
      throw std::logic_error("n_table: sum not divisible by n=" + std::to_string(n) +
                             " at ell=" + std::to_string(ell));
    mpz_divexact_ui(values[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
  return NSeries(ell, std::move(values));
}

NSeries n_series(unsigned ell, std::size_t n_max) {
  return n_table(ell, n_max, g_table_by_recurrence(ell, n_max < 1 ? 1 : n_max));
}

Rational n_value_by_partition_sum(unsigned ell, std::size_t n, const GSeries& g) {
  if (n < 1) throw std::invalid_argument("n_value_by_partition_sum: n must be >= 1");
  check_cover(ell, n, g);
  Rational total = 0;
  for_each_partition(static_cast<unsigned>(n), [&](const Partition& parts) {
    const auto mult = part_multiplicities(parts, static_cast<unsigned>(n));
    Integer num = 1;
    Integer den = 1;
    for (unsigned m = 1; m <= n; ++m) {
      if (mult[m] == 0) continue;
      num *= ipow(g[m], mult[m]);
      den *= ipow(Integer(m), mult[m]) * factorial(mult[m]);
    }
    total += make_rational(num, den);
  });
  return total;
}

std::size_t OrbifoldPolynomial::degree() const {
  for (std::size_t k = coeffs.size(); k-- > 0;)
    if (coeffs[k] != 0) return k;
  return 0;
}

Rational OrbifoldPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

std::vector<OrbifoldPolynomial> orbifold_polynomials(unsigned ell, std::size_t n_max,
                                                     const GSeries& g) {
  if (n_max >= 1) check_cover(ell, n_max, g);

  // G(t) = sum g(m) t^m / m is scaled by D = lcm(1..n_max) to integers.
  Integer lcm = 1;
  for (std::size_t m = 2; m <= n_max; ++m) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), m);
  std::vector<Integer> scaled(n_max + 1, 0);
  for (std::size_t m = 1; m <= n_max; ++m)
    scaled[m] = g[m] * (lcm / static_cast<unsigned long>(m));

  std::vector<OrbifoldPolynomial> polys(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    polys[n].ell = ell;
    polys[n].n = n;
    polys[n].coeffs.assign(n + 1, Rational(0));
  }
  polys[0].coeffs[0] = 1;

  // power holds (D*G)^j truncated at degree n_max; only degrees >= j are nonzero.
  std::vector<Integer> power(n_max + 1, 0);
  power[0] = 1;
  Integer denom = 1;
  std::vector<Integer> next(n_max + 1);
  for (std::size_t j = 1; j <= n_max; ++j) {
    for (auto& v : next) v = 0;
    for (std::size_t a = j - 1; a < n_max; ++a) {
      if (power[a] == 0) continue;
      for (std::size_t b = 1; a + b <= n_max; ++b)
        mpz_addmul(next[a + b].get_mpz_t(), power[a].get_mpz_t(), scaled[b].get_mpz_t());
    }
    power.swap(next);
    denom *= lcm * static_cast<unsigned long>(j);
    for (std::size_t n = j; n <= n_max; ++n) polys[n].coeffs[j] = make_rational(power[n], denom);
  }
  return polys;
}

OrbifoldPolynomial orbifold_polynomial(unsigned ell, std::size_t n, const GSeries& g) {
  auto all = orbifold_polynomials(ell, n, g);
  return std::move(all[n]);
}

std::vector<Integer> partition_table(std::size_t n_max) {
  std::vector<Integer> p(n_max + 1, 0);
  p[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Integer acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t first = k * (3 * k - 1) / 2;
      if (first > n) break;
      const std::size_t second = k * (3 * k + 1) / 2;
      Integer term = p[n - first];
      if (second <= n) term += p[n - second];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[n] = acc;
  }
  return p;
}

Rational a_lower_bound(unsigned ell, std::size_t n) {
  if (ell < 2) throw std::invalid_argument("a_lower_bound: ell must be >= 2");
  if (n < 1) throw std::invalid_argument("a_lower_bound: n must be >= 1");
  const unsigned e = ell - 2;
  switch (n % 3) {
    case 0: {
      const std::size_t j = n / 3;
      return make_rational(ipow(3, static_cast<std::uint64_t>(e) * j), factorial(j));
    }
    case 1: {
      if (n < 4) throw std::domain_error("a_lower_bound: undefined for n = 1");
      const std::size_t j = (n - 4) / 3;
      return make_rational(3 * ipow(4 * ipow(3, j), e), 2 * factorial(j));
    }
    default: {
      const std::size_t j = (n - 2) / 3;
      return make_rational(ipow(2 * ipow(3, j), e), factorial(j));
    }
  }
}

void write_csv(std::ostream& out, const NSeries& series) {
  out << "n,N\n";
  for (std::size_t n = 0; n <= series.n_max(); ++n) out << n << ',' << to_string(series.value(n)) << '\n';
}

}  // namespace commtuples
