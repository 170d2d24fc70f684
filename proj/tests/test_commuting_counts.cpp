#include "commtuples/bounds.hpp"
#include "commtuples/commuting_counts.hpp"

#include <doctest.h>

#include <vector>

using namespace commtuples;

namespace {

// Coin-change count of partitions; shares nothing with the pentagonal recurrence.
std::vector<Integer> partitions_by_parts(std::size_t n_max) {
  std::vector<Integer> ways(n_max + 1, 0);
  ways[0] = 1;
  for (std::size_t part = 1; part <= n_max; ++part)
    for (std::size_t total = part; total <= n_max; ++total) ways[total] += ways[total - part];
  return ways;
}

Rational n3_closed_form(unsigned ell) {
  return make_rational(ipow(3, ell - 1), 2) + Rational(ipow(2, ell - 1)) - make_rational(1, 2);
}

}  // namespace

TEST_CASE("partition numbers") {
  const auto p = partition_table(200);
  const auto oracle = partitions_by_parts(200);
  CHECK(p == oracle);
  CHECK(p[0] == 1);
  CHECK(p[20] == 627);
  CHECK(p[25] == 1958);
}

TEST_CASE("n_table examples") {
  const auto n2 = n_series(2, 5);
  const std::vector<int> want{1, 1, 2, 3, 5, 7};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(n2.integer(n) == want[n]);

  for (unsigned ell = 1; ell <= 20; ++ell) {
    const auto s = n_series(ell, 3);
    CHECK(s.integer(0) == 1);
    CHECK(s.integer(1) == 1);
    CHECK(s.integer(2) == ipow(2, ell - 1));
    CHECK(s.value(3) == n3_closed_form(ell));
  }
  CHECK(n_series(3, 3).integer(3) == 8);
}

TEST_CASE("ell = 0 gives the exponential series") {
  const auto s = n_series(0, 12);
  CHECK_FALSE(s.integral());
  CHECK(s.value(3) == make_rational(1, 6));
  for (std::size_t n = 0; n <= 12; ++n) CHECK(s.value(n) == make_rational(1, factorial(n)));
  CHECK_THROWS_AS(s.integer(2), std::logic_error);
}

TEST_CASE("N_2 equals p(n)") {
  const auto p = partition_table(2000);
  const auto s = n_series(2, 2000);
  CHECK(s.integers() == p);
}

TEST_CASE("n_table validates its g table") {
  const auto g3 = g_table_by_recurrence(3, 10);
  CHECK_THROWS_AS(n_table(2, 5, g3), std::invalid_argument);
  CHECK_THROWS_AS(n_table(3, 11, g3), std::invalid_argument);
}

TEST_CASE("inexact division is a hard failure") {
  // A fake g table that is not a subgroup-growth function.
  std::vector<Integer> fake{0, 1, 2};
  CHECK_THROWS_AS(n_table(1, 2, GSeries(1, fake)), std::logic_error);
}

TEST_CASE("partition sum agrees with the recurrence") {
  const auto g = g_table_by_recurrence(2, 4);
  CHECK(n_value_by_partition_sum(2, 4, g) == 5);
  CHECK(n_value_by_partition_sum(3, 3, g_table_by_recurrence(3, 3)) == 8);
  for (unsigned ell = 0; ell <= 4; ++ell) {
    const auto gl = g_table_by_recurrence(ell, 12);
    const auto s = n_table(ell, 12, gl);
    CHECK(n_value_by_partition_sum(ell, 1, gl) == gl[1]);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(n_value_by_partition_sum(ell, n, gl) == s.value(n));
  }
}

TEST_CASE("orbifold polynomials") {
  const auto g2 = g_table_by_recurrence(2, 4);
  const auto p0 = orbifold_polynomial(2, 0, g2);
  CHECK(p0.coeffs == std::vector<Rational>{1});

  const auto p2 = orbifold_polynomial(2, 2, g2);
  REQUIRE(p2.coeffs.size() == 3);
  CHECK(p2.coeffs[0] == 0);
  CHECK(p2.coeffs[1] == make_rational(3, 2));
  CHECK(p2.coeffs[2] == make_rational(1, 2));

  for (unsigned ell = 2; ell <= 4; ++ell) {
    const auto g = g_table_by_recurrence(ell, 30);
    const auto series = n_table(ell, 30, g);
    const auto polys = orbifold_polynomials(ell, 30, g);
    for (std::size_t n = 0; n <= 30; ++n) {
      CHECK(polys[n].degree() == n);
      CHECK(polys[n].coeffs[n] == make_rational(1, factorial(n)));
      CHECK(polys[n].evaluate(1) == series.value(n));
    }
  }
}

TEST_CASE("A_ell(n) lower bound") {
  CHECK(a_lower_bound(2, 3) == 1);
  // (2 * 3^1)^1 / 1! evaluates to 6.
  CHECK(a_lower_bound(3, 5) == 6);
  CHECK(a_lower_bound(2, 4) == make_rational(3, 2));
  CHECK_THROWS_AS(a_lower_bound(3, 1), std::domain_error);
  CHECK_THROWS_AS(a_lower_bound(1, 3), std::invalid_argument);

  const auto p = partition_table(60);
  for (unsigned ell = 2; ell <= 8; ++ell) {
    const auto s = n_series(ell, 60);
    for (unsigned n = 2; n <= 60; ++n) {
      CHECK(a_lower_bound(ell, n) <= s.value(n));
      CHECK(s.value(n) <= Rational(p[n] * ipow(max_product(n).m1, ell - 1)));
    }
  }
}
