#pragma once

// Log-concavity discriminant Delta_ell(n) = N(n)^2 - N(n-1) N(n+1) and the
// scanners built on it. A pair (n, ell) is an exception iff Delta < 0; zero
// counts as log-concave.
//
// Column scans (fixed ell, a range of n) are independent work units. Two
// implementations are kept: scan_columns distributes columns over OpenMP
// threads and optionally checkpoints finished columns, scan_columns_serial
// is the plain reference loop used by the tests and the benchmark.

#include "commtuples/bounds.hpp"
#include "commtuples/commuting_counts.hpp"
#include "commtuples/exact.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

namespace commtuples {

/// Exact Delta_ell(n); series must cover 0..n+1 and n >= 1.
Rational delta(unsigned ell, std::size_t n, const NSeries& series);
Sign delta_sign(std::size_t n, const NSeries& series);

struct ScanOptions {
  unsigned workers = 1;
  std::optional<std::filesystem::path> checkpoint;
};

/// Signs of Delta_ell(n) for n_lo <= n <= n_hi at one ell.
struct Column {
  unsigned ell = 0;
  std::vector<Sign> signs;

  bool operator==(const Column&) const = default;
};

Column scan_column(unsigned ell, std::size_t n_lo, std::size_t n_hi);

/// Result order follows ells regardless of worker count.
std::vector<Column> scan_columns(const std::vector<unsigned>& ells, std::size_t n_lo,
                                 std::size_t n_hi, const ScanOptions& options = {});
std::vector<Column> scan_columns_serial(const std::vector<unsigned>& ells, std::size_t n_lo,
                                        std::size_t n_hi);

class ExceptionGrid {
 public:
  ExceptionGrid() = default;
  ExceptionGrid(std::size_t n_lo, std::size_t n_hi, unsigned ell_lo, unsigned ell_hi);

  std::size_t n_lo() const { return n_lo_; }
  std::size_t n_hi() const { return n_hi_; }
  unsigned ell_lo() const { return ell_lo_; }
  unsigned ell_hi() const { return ell_hi_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Sign sign(std::size_t n, unsigned ell) const;
  void set(std::size_t n, unsigned ell, Sign s);
  bool is_exception(std::size_t n, unsigned ell) const { return sign(n, ell) == Sign::negative; }

  bool operator==(const ExceptionGrid&) const = default;

 private:
  std::size_t index(std::size_t n, unsigned ell) const;

  std::size_t n_lo_ = 1;
  std::size_t n_hi_ = 0;
  unsigned ell_lo_ = 0;
  unsigned ell_hi_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Sign> cells_;
};

ExceptionGrid exception_grid(std::size_t n_lo, std::size_t n_hi, unsigned ell_lo, unsigned ell_hi,
                             const ScanOptions& options = {});
ExceptionGrid exception_grid_serial(std::size_t n_lo, std::size_t n_hi, unsigned ell_lo,
                                    unsigned ell_hi);

/// Closed interval of ell; hi empty means unbounded.
struct EllInterval {
  unsigned lo = 0;
  std::optional<unsigned> hi;

  bool operator==(const EllInterval&) const = default;
};

enum class TailMarker { exceptional, log_concave, unverified };

struct ExceptionClassification {
  unsigned n = 0;
  unsigned window_ell_max = 0;
  std::vector<EllInterval> exceptions;
  TailMarker tail = TailMarker::unverified;
  std::optional<ThresholdBound> threshold;
};

/// Scans ell in [0, window_ell_max] exactly. When a threshold is given and
/// the window reaches it, the sign at ell = threshold is compared with the
/// certified sign; on agreement the tail is marked and a trailing exception
/// run becomes unbounded.
ExceptionClassification classify_exceptions(unsigned n, unsigned window_ell_max,
                                            const std::optional<ThresholdBound>& threshold);

/// Window max(60, ceil(L(n))) with the L(n) threshold.
ExceptionClassification classify_exceptions(unsigned n);

struct FixedEllPattern {
  unsigned ell = 0;
  std::size_t n_max = 0;
  std::vector<std::size_t> log_concave;  // Delta >= 0
  std::vector<std::size_t> log_convex;   // Delta < 0
};

FixedEllPattern fixed_ell_pattern(unsigned ell, std::size_t n_max);
FixedEllPattern pattern_from_column(const Column& column, std::size_t n_lo);

/// Least n0 with Delta_ell(n) >= 0 for n0 <= n <= n_check. n_check >= 3.
std::size_t smallest_logconcave_start(unsigned ell, std::size_t n_check);
std::size_t smallest_start_from_column(const Column& column, std::size_t n_lo);

struct StartEntry {
  unsigned ell = 0;
  std::size_t n0 = 0;
};

/// smallest_logconcave_start for several ell, columns in parallel.
std::vector<StartEntry> smallest_logconcave_starts(const std::vector<unsigned>& ells,
                                                   std::size_t n_check,
                                                   const ScanOptions& options = {});

}  // namespace commtuples
