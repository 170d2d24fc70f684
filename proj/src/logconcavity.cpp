#include "commtuples/logconcavity.hpp"

#include "commtuples/checkpoint.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace commtuples {

namespace {

void require_delta_range(std::size_t n, const NSeries& series) {
  if (n < 1) throw std::out_of_range("delta: n must be >= 1");
  if (series.n_max() < n + 1)
    throw std::out_of_range("delta: series covers 0.." + std::to_string(series.n_max()) +
                            ", need 0.." + std::to_string(n + 1));
}

}  // namespace

Rational delta(unsigned ell, std::size_t n, const NSeries& series) {
  if (series.ell() != ell)
    throw std::invalid_argument("delta: series is for ell=" + std::to_string(series.ell()));
  require_delta_range(n, series);
  if (series.integral()) {
    const Integer& mid = series.integer(n);
    return Rational(Integer(mid * mid - series.integer(n - 1) * series.integer(n + 1)));
  }
  const Rational mid = series.value(n);
  return mid * mid - series.value(n - 1) * series.value(n + 1);
}

Sign delta_sign(std::size_t n, const NSeries& series) {
  require_delta_range(n, series);
  if (!series.integral()) return sign_of(delta(series.ell(), n, series));
  Integer square;
  Integer cross;
  mpz_mul(square.get_mpz_t(), series.integer(n).get_mpz_t(), series.integer(n).get_mpz_t());
  mpz_mul(cross.get_mpz_t(), series.integer(n - 1).get_mpz_t(),
          series.integer(n + 1).get_mpz_t());
  return static_cast<Sign>(cmp(square, cross) > 0 ? 1 : (cmp(square, cross) < 0 ? -1 : 0));
}

Column scan_column(unsigned ell, std::size_t n_lo, std::size_t n_hi) {
  if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("scan_column: need 1 <= n_lo <= n_hi");
  const NSeries series = n_series(ell, n_hi + 1);
  Column col;
  col.ell = ell;
  col.signs.reserve(n_hi - n_lo + 1);
  for (std::size_t n = n_lo; n <= n_hi; ++n) col.signs.push_back(delta_sign(n, series));
  return col;
}

std::vector<Column> scan_columns_serial(const std::vector<unsigned>& ells, std::size_t n_lo,
                                        std::size_t n_hi) {
  std::vector<Column> out;
  out.reserve(ells.size());
  for (auto ell : ells) out.push_back(scan_column(ell, n_lo, n_hi));
  return out;
}

std::vector<Column> scan_columns(const std::vector<unsigned>& ells, std::size_t n_lo,
                                 std::size_t n_hi, const ScanOptions& options) {
  if (options.workers < 1) throw std::invalid_argument("scan_columns: workers must be >= 1");
  if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("scan_columns: need 1 <= n_lo <= n_hi");

  std::optional<ColumnCheckpoint> checkpoint;
  if (options.checkpoint) checkpoint.emplace(*options.checkpoint, n_lo, n_hi);

  // Large ell columns are the expensive ones; hand them out first.
  std::vector<std::size_t> order(ells.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ells[a] > ells[b]; });

  std::vector<Column> out(ells.size());
  std::exception_ptr error;
  const long count = static_cast<long>(order.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.workers)
  for (long i = 0; i < count; ++i) {
    const std::size_t slot = order[static_cast<std::size_t>(i)];
    try {
      std::optional<Column> done;
      if (checkpoint) done = checkpoint->find(ells[slot]);
      if (done) {
        out[slot] = std::move(*done);
      } else {
        out[slot] = scan_column(ells[slot], n_lo, n_hi);
        if (checkpoint) checkpoint->record(out[slot]);
      }
    } catch (...) {
#pragma omp critical(commtuples_scan_error)
      if (!error) error = std::current_exception();
    }
  }

  if (error) std::rethrow_exception(error);
  return out;
}

ExceptionGrid::ExceptionGrid(std::size_t n_lo, std::size_t n_hi, unsigned ell_lo, unsigned ell_hi)
    : n_lo_(n_lo), n_hi_(n_hi), ell_lo_(ell_lo), ell_hi_(ell_hi) {
  rows_ = n_hi >= n_lo ? n_hi - n_lo + 1 : 0;
  cols_ = ell_hi >= ell_lo ? ell_hi - ell_lo + 1 : 0;
  cells_.assign(rows_ * cols_, Sign::zero);
}

std::size_t ExceptionGrid::index(std::size_t n, unsigned ell) const {
  if (n < n_lo_ || n > n_hi_ || ell < ell_lo_ || ell > ell_hi_ || empty())
    throw std::out_of_range("ExceptionGrid: cell (n=" + std::to_string(n) +
                            ", ell=" + std::to_string(ell) + ") outside the grid");
  return (n - n_lo_) * cols_ + (ell - ell_lo_);
}

Sign ExceptionGrid::sign(std::size_t n, unsigned ell) const { return cells_[index(n, ell)]; }

void ExceptionGrid::set(std::size_t n, unsigned ell, Sign s) { cells_[index(n, ell)] = s; }

namespace {

std::vector<unsigned> ell_range(unsigned lo, unsigned hi) {
  std::vector<unsigned> ells;
  for (unsigned ell = lo; ell <= hi; ++ell) ells.push_back(ell);
  return ells;
}

ExceptionGrid fill_grid(std::size_t n_lo, std::size_t n_hi, unsigned ell_lo, unsigned ell_hi,
                        const std::vector<Column>& columns) {
  ExceptionGrid grid(n_lo, n_hi, ell_lo, ell_hi);
  for (const auto& col : columns)
    for (std::size_t i = 0; i < col.signs.size(); ++i) grid.set(n_lo + i, col.ell, col.signs[i]);
  return grid;
}

void require_grid_ranges(std::size_t n_lo, std::size_t n_hi, unsigned ell_lo, unsigned ell_hi) {
  if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("exception_grid: need 1 <= n_lo <= n_hi");
  if (ell_lo > ell_hi) throw std::invalid_argument("exception_grid: need ell_lo <= ell_hi");
}

}  // namespace

ExceptionGrid exception_grid(std::size_t n_lo, std::size_t n_hi, unsigned ell_lo, unsigned ell_hi,
                             const ScanOptions& options) {
  require_grid_ranges(n_lo, n_hi, ell_lo, ell_hi);
  return fill_grid(n_lo, n_hi, ell_lo, ell_hi,
                   scan_columns(ell_range(ell_lo, ell_hi), n_lo, n_hi, options));
}

ExceptionGrid exception_grid_serial(std::size_t n_lo, std::size_t n_hi, unsigned ell_lo,
                                    unsigned ell_hi) {
  require_grid_ranges(n_lo, n_hi, ell_lo, ell_hi);
  return fill_grid(n_lo, n_hi, ell_lo, ell_hi,
                   scan_columns_serial(ell_range(ell_lo, ell_hi), n_lo, n_hi));
}

ExceptionClassification classify_exceptions(unsigned n, unsigned window_ell_max,
                                            const std::optional<ThresholdBound>& threshold) {
  if (n < 1) throw std::invalid_argument("classify_exceptions: n must be >= 1");

  // Fixed n, increasing ell: carry the g layer forward instead of rebuilding it.
  std::vector<Sign> signs;
  signs.reserve(window_ell_max + 1);
  GSeries g = g_base_layer(n + 1);
  for (unsigned ell = 0; ell <= window_ell_max; ++ell) {
    if (ell > 0) g = g_next_layer(g);
    signs.push_back(delta_sign(n, n_table(ell, n + 1, g)));
  }

  ExceptionClassification c;
  c.n = n;
  c.window_ell_max = window_ell_max;
  c.threshold = threshold;
  for (unsigned ell = 0; ell <= window_ell_max; ++ell) {
    if (signs[ell] != Sign::negative) continue;
    if (!c.exceptions.empty() && c.exceptions.back().hi == ell - 1)
      c.exceptions.back().hi = ell;
    else
      c.exceptions.push_back({ell, ell});
  }

  if (!threshold || !threshold->value_ceiling.fits_uint_p()) return c;
  const unsigned start = static_cast<unsigned>(threshold->value_ceiling.get_ui());
  if (start > window_ell_max) return c;
  const Sign observed = signs[start];
  const bool constant = std::all_of(signs.begin() + start, signs.end(),
                                    [&](Sign s) { return s == observed; });
  if (!constant || observed != threshold->certified_sign) return c;

  if (observed == Sign::negative) {
    c.tail = TailMarker::exceptional;
    c.exceptions.back().hi.reset();
  } else {
    c.tail = TailMarker::log_concave;
  }
  return c;
}

ExceptionClassification classify_exceptions(unsigned n) {
  const ThresholdBound bound = L_threshold(n);
  const unsigned window = std::max(60u, static_cast<unsigned>(bound.value_ceiling.get_ui()));
  return classify_exceptions(n, window, bound);
}

FixedEllPattern pattern_from_column(const Column& column, std::size_t n_lo) {
  FixedEllPattern p;
  p.ell = column.ell;
  p.n_max = n_lo + column.signs.size() - 1;
  for (std::size_t i = 0; i < column.signs.size(); ++i) {
    if (column.signs[i] == Sign::negative)
      p.log_convex.push_back(n_lo + i);
    else
      p.log_concave.push_back(n_lo + i);
  }
  return p;
}

FixedEllPattern fixed_ell_pattern(unsigned ell, std::size_t n_max) {
  if (ell < 1) throw std::invalid_argument("fixed_ell_pattern: ell must be >= 1");
  return pattern_from_column(scan_column(ell, 1, n_max), 1);
}

std::size_t smallest_start_from_column(const Column& column, std::size_t n_lo) {
  std::size_t n0 = n_lo;
  for (std::size_t i = 0; i < column.signs.size(); ++i)
    if (column.signs[i] == Sign::negative) n0 = n_lo + i + 1;
  return n0;
}

std::size_t smallest_logconcave_start(unsigned ell, std::size_t n_check) {
  if (n_check < 3) throw std::invalid_argument("smallest_logconcave_start: n_check must be >= 3");
  return smallest_start_from_column(scan_column(ell, 1, n_check), 1);
}

std::vector<StartEntry> smallest_logconcave_starts(const std::vector<unsigned>& ells,
                                                   std::size_t n_check,
                                                   const ScanOptions& options) {
  if (n_check < 3) throw std::invalid_argument("smallest_logconcave_starts: n_check must be >= 3");
  const auto columns = scan_columns(ells, 1, n_check, options);
  std::vector<StartEntry> out;
  for (const auto& col : columns) out.push_back({col.ell, smallest_start_from_column(col, 1)});
  return out;
}

}  // namespace commtuples
