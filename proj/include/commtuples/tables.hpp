#pragma once

// Reproduction of the six published tables and comparison against the
// golden files shipped in data/golden.
//
//   T1  exception landscape, 1 <= n <= 30, 0 <= ell <= 20
//   T2  exception landscape, 1 <= n <= 30, 20 <= ell <= 40
//   T3  classification of exceptions for 1 <= n <= 20
//   T4  log-concavity patterns for fixed 1 <= ell <= 10
//   T5  smallest n0 for 1 <= ell <= 40
//   T6  ceil(L(n)) for 1 <= n <= 20

#include "commtuples/logconcavity.hpp"
#include "commtuples/render.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace commtuples {

enum class TableId { T1, T2, T3, T4, T5, T6 };

/// Accepts "T1".."T6" (case-insensitive) or "1".."6".
TableId parse_table_id(std::string_view name);
std::string table_name(TableId id);

struct TableOptions {
  Format format = Format::latex;
  ScanOptions scan;
  std::size_t n_check = 1000;         // T5 window
  std::size_t ell2_n_max = 10000;     // T4, ell = 2
  std::size_t pattern_n_max = 2000;   // T4, other ell
  std::filesystem::path golden_dir = default_golden_dir();

  static std::filesystem::path default_golden_dir();
};

struct TableReport {
  TableId id = TableId::T1;
  std::string rendered;
  bool checked = false;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Computes the table, renders it in options.format, and with check = true
/// compares the computed content against the golden files.
TableReport build_table(TableId id, const TableOptions& options, bool check);

/// Line-level comparison; returns one message per differing line.
std::vector<std::string> diff_lines(std::string_view expected, std::string_view actual,
                                    std::size_t max_reports = 10);

std::string read_file(const std::filesystem::path& path);

}  // namespace commtuples
