#include "commtuples/subgroup_growth.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace commtuples {

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned m = 0;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    f.factors.push_back({p, m});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t sigma(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma: n must be positive");
  std::uint64_t s = 0;
  for (auto d : divisors(n)) s += d;
  return s;
}

GSeries::GSeries(unsigned ell, std::vector<Integer> values) : ell_(ell), values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("GSeries: needs at least index 1");
}

const Integer& GSeries::operator[](std::size_t n) const {
  if (n == 0 || n >= values_.size())
    throw std::out_of_range("GSeries: index " + std::to_string(n) + " outside 1.." +
                            std::to_string(n_max()));
  return values_[n];
}

GSeries g_base_layer(std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("g table: n_max must be >= 1");
  std::vector<Integer> v(n_max + 1, 0);
  v[1] = 1;
  return GSeries(0, std::move(v));
}

GSeries g_next_layer(const GSeries& previous) {
  const std::size_t n_max = previous.n_max();
  const auto& prev = previous.values();
  std::vector<Integer> next(n_max + 1, 0);
  Integer term;
  for (std::size_t d = 1; d <= n_max; ++d) {
    if (prev[d] == 0) continue;
    mpz_mul_ui(term.get_mpz_t(), prev[d].get_mpz_t(), d);
    for (std::size_t multiple = d; multiple <= n_max; multiple += d) next[multiple] += term;
  }
  return GSeries(previous.ell() + 1, std::move(next));
}

GSeries g_table_by_recurrence(unsigned ell, std::size_t n_max) {
  GSeries g = g_base_layer(n_max);
  for (unsigned step = 0; step < ell; ++step) g = g_next_layer(g);
  return g;
}

Integer g_prime_power(std::uint64_t p, unsigned m, unsigned ell) {
  if (p < 2) throw std::invalid_argument("g_prime_power: p must be prime");
  if (m == 0) return 1;
  Integer numerator = 1;
  Integer denominator = 1;
  const Integer base(static_cast<unsigned long>(p));
  for (unsigned i = 0; i < m; ++i) numerator *= ipow(base, ell + i) - 1;
  for (unsigned i = 1; i <= m; ++i) denominator *= ipow(base, i) - 1;
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw std::logic_error("g_prime_power: inexact Gaussian-binomial division for p=" +
                           std::to_string(p) + " m=" + std::to_string(m) +
                           " ell=" + std::to_string(ell));
  Integer q;
  mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return q;
}

Integer g_multiplicative(std::uint64_t n, unsigned ell) {
  const Factorization f = factorize(n);
  Integer product = 1;
  for (const auto& [p, m] : f.factors) product *= g_prime_power(p, m, ell);
  return product;
}

GSeries g_table_multiplicative(unsigned ell, std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("g table: n_max must be >= 1");
  std::vector<Integer> v(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) v[n] = g_multiplicative(n, ell);
  return GSeries(ell, std::move(v));
}

void write_csv(std::ostream& out, const GSeries& g) {
  out << "n,g\n";
  for (std::size_t n = 1; n <= g.n_max(); ++n) out << n << ',' << g[n] << '\n';
}

}  // namespace commtuples
