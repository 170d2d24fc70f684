#include "commtuples/checkpoint.hpp"
#include "commtuples/logconcavity.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <string>

using namespace commtuples;
namespace fs = std::filesystem;

namespace {

fs::path scratch_file(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "commtuples_tests";
  fs::create_directories(dir);
  const auto path = dir / name;
  fs::remove(path);
  return path;
}

std::vector<unsigned> ell_range(unsigned lo, unsigned hi) {
  std::vector<unsigned> ells(hi - lo + 1);
  std::iota(ells.begin(), ells.end(), lo);
  return ells;
}

// Delta recomputed from the partition-sum route only.
Rational delta_by_partition_sum(unsigned ell, std::size_t n) {
  const auto g = g_table_by_recurrence(ell, n + 1);
  const Rational prev = n == 1 ? Rational(1) : n_value_by_partition_sum(ell, n - 1, g);
  const Rational mid = n_value_by_partition_sum(ell, n, g);
  const Rational next = n_value_by_partition_sum(ell, n + 1, g);
  return mid * mid - prev * next;
}

}  // namespace

TEST_CASE("delta examples") {
  for (std::size_t n = 1; n <= 40; ++n) CHECK(delta(1, n, n_series(1, 41)) == 0);
  const auto s2 = n_series(2, 30);
  CHECK(delta(2, 1, s2) == -1);
  CHECK(delta(2, 25, s2) < 0);
  CHECK(delta_sign(26, s2) == Sign::positive);
  CHECK(delta(2, 4, s2) == 5 * 5 - 3 * 7);
  CHECK(delta(0, 3, n_series(0, 4)) == make_rational(1, 36) - make_rational(1, 48));
  CHECK_THROWS(delta(2, 30, s2));
}

TEST_CASE("delta agrees with the partition-sum route") {
  for (unsigned ell = 0; ell <= 5; ++ell)
    for (std::size_t n = 1; n <= 12; ++n)
      CHECK(delta(ell, n, n_series(ell, n + 1)) == delta_by_partition_sum(ell, n));
}

TEST_CASE("parallel and serial scans agree") {
  const auto ells = ell_range(0, 25);
  const auto serial = scan_columns_serial(ells, 1, 40);
  for (unsigned workers : {1u, 3u}) {
    ScanOptions options;
    options.workers = workers;
    CHECK(scan_columns(ells, 1, 40, options) == serial);
  }
  for (std::size_t i = 0; i < ells.size(); ++i) CHECK(serial[i] == scan_column(ells[i], 1, 40));

  ScanOptions three;
  three.workers = 3;
  CHECK(exception_grid(1, 30, 0, 20, three) == exception_grid_serial(1, 30, 0, 20));
}

TEST_CASE("landscape rows without exceptions") {
  const auto grid = exception_grid(1, 30, 0, 40);
  for (std::size_t n : {2, 6, 12, 18, 24, 27, 30})
    for (unsigned ell = 0; ell <= 40; ++ell) CHECK_FALSE(grid.is_exception(n, ell));
  CHECK(grid.is_exception(25, 2));
  CHECK(grid.rows() == 30);
  CHECK(grid.cols() == 41);
  CHECK_THROWS_AS(grid.sign(31, 0), std::out_of_range);
}

TEST_CASE("checkpoint resume reproduces the fresh scan") {
  const auto path = scratch_file("resume.json");
  const auto ells = ell_range(0, 12);
  const auto fresh = scan_columns_serial(ells, 1, 30);

  ScanOptions options;
  options.workers = 3;
  options.checkpoint = path;
  const std::vector<unsigned> first_half(ells.begin(), ells.begin() + 6);
  scan_columns(first_half, 1, 30, options);
  {
    ColumnCheckpoint cp(path, 1, 30);
    CHECK(cp.size() == 6);
    REQUIRE(cp.find(3));
    CHECK(*cp.find(3) == fresh[3]);
    CHECK_FALSE(cp.find(9));
  }
  CHECK(scan_columns(ells, 1, 30, options) == fresh);
  CHECK(ColumnCheckpoint(path, 1, 30).size() == ells.size());
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
}

TEST_CASE("checkpoint errors are explicit") {
  const auto path = scratch_file("bad.json");
  {
    std::ofstream(path) << "{ not json";
  }
  CHECK_THROWS_AS(ColumnCheckpoint(path, 1, 30), CheckpointError);

  const auto other = scratch_file("range.json");
  ScanOptions options;
  options.checkpoint = other;
  scan_columns({2, 3}, 1, 30, options);
  CHECK_THROWS_AS(ColumnCheckpoint(other, 1, 31), CheckpointError);
  CHECK_THROWS_AS(scan_columns({2}, 1, 20, options), CheckpointError);

  // Signs and exception list disagree.
  const auto forged = scratch_file("forged.json");
  {
    std::ofstream(forged) << R"({"format":"commtuples-columns","version":1,"n_lo":1,"n_hi":3,)"
                          << R"("columns":[{"ell":2,"signs":"-+-","exceptions":[1]}]})";
  }
  CHECK_THROWS_AS(ColumnCheckpoint(forged, 1, 3), CheckpointError);

  CHECK(ColumnCheckpoint(scratch_file("missing.json"), 1, 3).size() == 0);
}

TEST_CASE("classification examples") {
  const auto n3 = classify_exceptions(3);
  CHECK(n3.exceptions == std::vector<EllInterval>{{2, 13}});
  CHECK(n3.tail == TailMarker::log_concave);

  const auto n17 = classify_exceptions(17);
  CHECK(n17.exceptions == std::vector<EllInterval>{{2, 6}, {24, 54}});

  const auto n18 = classify_exceptions(18);
  CHECK(n18.exceptions.empty());
  CHECK(n18.tail == TailMarker::log_concave);

  const auto n4 = classify_exceptions(4);
  REQUIRE_FALSE(n4.exceptions.empty());
  CHECK_FALSE(n4.exceptions.back().hi.has_value());
  CHECK(n4.tail == TailMarker::exceptional);

  // Window short of the threshold: the tail is not certified.
  const auto short_window = classify_exceptions(3, 20, L_threshold(3));
  CHECK(short_window.tail == TailMarker::unverified);
  CHECK(short_window.exceptions == std::vector<EllInterval>{{2, 13}});
  CHECK(classify_exceptions(3, 60, std::nullopt).tail == TailMarker::unverified);
}

TEST_CASE("fixed-ell patterns") {
  const auto p2 = fixed_ell_pattern(2, 3000);
  std::vector<std::size_t> odd;
  for (std::size_t n = 1; n <= 25; n += 2) odd.push_back(n);
  CHECK(p2.log_convex == odd);
  CHECK(p2.log_concave.size() + p2.log_convex.size() == 3000);

  const auto p5 = fixed_ell_pattern(5, 2000);
  CHECK(p5.log_convex == std::vector<std::size_t>{1, 3, 5, 7, 9, 11, 13, 15, 17});
  CHECK(fixed_ell_pattern(1, 200).log_convex.empty());

  const auto column = scan_column(5, 1, 300);
  const auto from_column = pattern_from_column(column, 1);
  CHECK(from_column.log_convex == p5.log_convex);
}

TEST_CASE("smallest log-concave start") {
  CHECK(smallest_logconcave_start(2, 300) == 26);
  CHECK(smallest_logconcave_start(10, 300) == 12);
  CHECK(smallest_logconcave_start(40, 300) == 45);
  CHECK(smallest_logconcave_start(1, 50) == 1);
  CHECK_THROWS_AS(smallest_logconcave_start(2, 2), std::invalid_argument);

  ScanOptions options;
  options.workers = 3;
  const auto starts = smallest_logconcave_starts({2, 10, 40}, 300, options);
  REQUIRE(starts.size() == 3);
  CHECK(starts[0].n0 == 26);
  CHECK(starts[1].n0 == 12);
  CHECK(starts[2].n0 == 45);
}

TEST_CASE("small-n lemma signs") {
  for (unsigned ell = 2; ell <= 40; ++ell) {
    const auto s = n_series(ell, 4);
    CHECK(delta_sign(1, s) == Sign::negative);
    CHECK(delta_sign(2, s) == Sign::positive);
  }
}

TEST_CASE("random cells match direct evaluation") {
  const auto grid = exception_grid(1, 30, 0, 40);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick_n(1, 30);
  std::uniform_int_distribution<unsigned> pick_ell(0, 40);
  for (int i = 0; i < 60; ++i) {
    const auto n = pick_n(rng);
    const auto ell = pick_ell(rng);
    CHECK(grid.sign(n, ell) == sign_of(delta(ell, n, n_series(ell, n + 1))));
  }
}
