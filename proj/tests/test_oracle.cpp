#include "commtuples/commuting_counts.hpp"
#include "commtuples/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace commtuples;

namespace {

// Plain nested enumeration of S_n^ell with a pairwise commutation test.
std::uint64_t naive_tuple_count(unsigned n, unsigned ell) {
  const auto perms = all_permutations(n);
  std::vector<std::size_t> index(ell, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (unsigned i = 0; i < ell && ok; ++i)
      for (unsigned j = i + 1; j < ell && ok; ++j) ok = perms[index[i]].commutes_with(perms[index[j]]);
    if (ok) ++count;
    unsigned pos = 0;
    while (pos < ell && ++index[pos] == perms.size()) index[pos++] = 0;
    if (pos == ell) break;
  }
  return count;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation a(std::vector<std::uint8_t>{1, 2, 0});
  const Permutation id(3);
  CHECK(a * a.inverse() == id);
  CHECK((a * a)(0) == 2);
  CHECK(a.cycle_type() == Partition{3});
  CHECK(id.cycle_type() == Partition{1, 1, 1});
  CHECK(a.commutes_with(a * a));
  CHECK_FALSE(a.commutes_with(Permutation(std::vector<std::uint8_t>{1, 0, 2})));
  CHECK_THROWS_AS(Permutation(std::vector<std::uint8_t>{0, 0, 1}), std::invalid_argument);

  for (unsigned n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    CHECK(Integer(static_cast<unsigned long>(perms.size())) == factorial(n));
    for (std::size_t r = 0; r < perms.size(); ++r) CHECK(perms[r].rank() == r);
  }
  for_each_partition(6, [](const Partition& type) {
    CHECK(permutation_with_cycle_type(type).cycle_type() == type);
  });
}

TEST_CASE("brute-force counts") {
  const auto r32 = count_commuting_tuples(3, 2);
  CHECK(r32.raw == 18);
  CHECK(r32.normalized == 3);
  const auto r33 = count_commuting_tuples(3, 3);
  CHECK(r33.raw == 48);
  CHECK(r33.normalized == 8);
  for (unsigned n = 1; n <= 5; ++n) {
    const auto r = count_commuting_tuples(n, 1);
    CHECK(r.raw == factorial(n));
    CHECK(r.normalized == 1);
  }
}

TEST_CASE("backtracking matches naive enumeration") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned ell = 0; ell <= 3; ++ell)
      CHECK(count_commuting_tuples(n, ell).raw == naive_tuple_count(n, ell));
}

TEST_CASE("brute force caps are explicit") {
  try {
    count_commuting_tuples(7, 2);
    FAIL("expected refusal");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("refusing") != std::string::npos);
  }
  CHECK_THROWS_AS(count_commuting_tuples(3, 5), std::invalid_argument);
}

TEST_CASE("centralizer recursion") {
  CHECK(count_hom_by_centralizers(4, 2).normalized == 5);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto r = count_hom_by_centralizers(n, 0);
    CHECK(r.raw == 1);
    CHECK(r.normalized == make_rational(1, factorial(n)));
  }
  CHECK(count_hom_by_centralizers(5, 3).normalized == n_series(3, 5).value(5));
  CHECK_THROWS_AS(count_hom_by_centralizers(9, 2), std::invalid_argument);
}

TEST_CASE("all three counting routes agree") {
  for (unsigned ell = 0; ell <= 3; ++ell) {
    const auto s = n_series(ell, 5);
    for (unsigned n = 1; n <= 5; ++n) {
      const auto brute = count_commuting_tuples(n, ell);
      CHECK(brute.normalized == s.value(n));
      CHECK(count_hom_by_centralizers(n, ell).raw == brute.raw);
    }
  }
  for (unsigned ell = 0; ell <= 5; ++ell) {
    const auto s = n_series(ell, 8);
    for (unsigned n = 1; n <= 8; ++n) CHECK(count_hom_by_centralizers(n, ell).normalized == s.value(n));
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(conjugacy_class_count(1) == 1);
  CHECK(conjugacy_class_count(4) == 5);
  CHECK(conjugacy_class_count(6) == 11);
  const auto p = partition_table(8);
  for (unsigned n = 1; n <= 8; ++n) CHECK(Integer(static_cast<unsigned long>(conjugacy_class_count(n))) == p[n]);
  CHECK_THROWS_AS(conjugacy_class_count(9), std::invalid_argument);
}
