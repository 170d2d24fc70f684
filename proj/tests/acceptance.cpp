// Acceptance suite: one PASS/FAIL line per criterion, full-size windows.
// Exit status is the number of failed criteria (0 on success).

#include "commtuples/bounds.hpp"
#include "commtuples/logconcavity.hpp"
#include "commtuples/oracle.hpp"
#include "commtuples/tables.hpp"
#include "commtuples/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace ct = commtuples;
using ct::Rational;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

ct::TableOptions table_options() {
  ct::TableOptions opt;
  opt.scan.workers = static_cast<unsigned>(omp_get_max_threads());
  return opt;
}

void check_table(ct::TableId id, const ct::TableOptions& opt, Outcome& out) {
  const auto report = ct::build_table(id, opt, true);
  if (!report.ok()) out.fail(ct::table_name(id) + ": " + report.mismatches.front());
}

Outcome landscapes() {
  Outcome out;
  const auto opt = table_options();
  check_table(ct::TableId::T1, opt, out);
  check_table(ct::TableId::T2, opt, out);
  const auto grid = ct::exception_grid(1, 30, 0, 40, opt.scan);
  for (std::size_t n : {2, 6, 12, 18, 24, 27, 30})
    for (unsigned ell = 0; ell <= 40; ++ell)
      if (grid.is_exception(n, ell)) out.fail("unexpected exception at n=" + std::to_string(n));
  return out;
}

Outcome thresholds() {
  Outcome out;
  const std::vector<unsigned> expected{7,   2,   40,  53,  76,  90,  102, 99,  146, 157,
                                       125, 203, 214, 152, 264, 274, 179, 326, 336, 487};
  for (unsigned n = 1; n <= 20; ++n) {
    const auto got = ct::L_threshold(n).value_ceiling;
    if (got != expected[n - 1]) out.fail("n=" + std::to_string(n) + " got " + got.get_str());
  }
  check_table(ct::TableId::T6, table_options(), out);
  return out;
}

Outcome classification() {
  Outcome out;
  check_table(ct::TableId::T3, table_options(), out);
  for (unsigned n = 1; n <= 20; ++n) {
    const auto check = ct::verify_theorem_sign(n, ct::L_threshold(n));
    if (!check.pass()) out.fail("tail sign at n=" + std::to_string(n));
  }
  return out;
}

Outcome patterns() {
  Outcome out;
  const auto opt = table_options();
  check_table(ct::TableId::T4, opt, out);
  const auto p2 = ct::fixed_ell_pattern(2, 10000);
  std::vector<std::size_t> odd;
  for (std::size_t n = 1; n <= 25; n += 2) odd.push_back(n);
  if (p2.log_convex != odd) out.fail("ell=2 exception set differs from odd n <= 25");
  return out;
}

Outcome smallest_starts() {
  Outcome out;
  auto opt = table_options();
  opt.n_check = 1000;
  check_table(ct::TableId::T5, opt, out);
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  for (unsigned ell = 0; ell <= 3; ++ell) {
    const auto series = ct::n_series(ell, 5);
    for (unsigned n = 1; n <= 5; ++n) {
      const auto brute = ct::count_commuting_tuples(n, ell);
      if (Rational(brute.raw) != series.value(n) * Rational(ct::factorial(n)))
        out.fail("brute n=" + std::to_string(n) + " ell=" + std::to_string(ell));
    }
  }
  for (unsigned ell = 0; ell <= 4; ++ell) {
    const auto series = ct::n_series(ell, 8);
    for (unsigned n = 1; n <= 8; ++n) {
      const auto rec = ct::count_hom_by_centralizers(n, ell);
      if (Rational(rec.raw) != series.value(n) * Rational(ct::factorial(n)))
        out.fail("centralizer n=" + std::to_string(n) + " ell=" + std::to_string(ell));
    }
  }
  return out;
}

Outcome g_agreement() {
  Outcome out;
  for (unsigned ell = 0; ell <= 10; ++ell) {
    const auto sieve = ct::g_table_by_recurrence(ell, 10000);
    const auto mult = ct::g_table_multiplicative(ell, 10000);
    for (std::size_t n = 1; n <= 10000; ++n)
      if (sieve[n] != mult[n]) {
        out.fail("ell=" + std::to_string(ell) + " n=" + std::to_string(n));
        break;
      }
  }
  return out;
}

Outcome polynomials() {
  Outcome out;
  for (unsigned ell = 2; ell <= 5; ++ell) {
    const auto g = ct::g_table_by_recurrence(ell, 100);
    const auto series = ct::n_table(ell, 100, g);
    const auto polys = ct::orbifold_polynomials(ell, 100, g);
    for (std::size_t n = 0; n <= 100; ++n)
      if (polys[n].evaluate(1) != series.value(n))
        out.fail("ell=" + std::to_string(ell) + " n=" + std::to_string(n));
  }
  return out;
}

Outcome property_suites() {
  Outcome out;
  for (const auto& check : ct::run_verify_suite("bounds"))
    if (!check.pass) out.fail(check.name + ": " + check.detail);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exception landscapes, 1<=n<=30, 0<=ell<=40", landscapes},
      {"ceil(L(n)) for 1<=n<=20", thresholds},
      {"exception classification for 1<=n<=20", classification},
      {"fixed-ell patterns (ell=2 to 10^4, others to 2000)", patterns},
      {"smallest n0 for 1<=ell<=40, window n<=1000", smallest_starts},
      {"oracle equivalence", oracle_equivalence},
      {"two-algorithm g_ell, n<=10^4, ell<=10", g_agreement},
      {"P_n(1) = N_ell(n), n<=100, 2<=ell<=5", polynomials},
      {"property suites", property_suites},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", took.count());
    std::cout << "criterion " << i + 1 << ": " << (outcome.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " (" << timing << ")";
    if (!outcome.pass) std::cout << "  " << outcome.detail;
    std::cout << std::endl;
    failed += outcome.pass ? 0 : 1;
  }
  return failed;
}
