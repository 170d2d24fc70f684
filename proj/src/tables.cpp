#include "commtuples/tables.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef COMMTUPLES_GOLDEN_DIR
#define COMMTUPLES_GOLDEN_DIR "data/golden"
#endif

namespace commtuples {

using nlohmann::json;

std::filesystem::path TableOptions::default_golden_dir() {
  if (const char* env = std::getenv("COMMTUPLES_GOLDEN_DIR")) return env;
  return COMMTUPLES_GOLDEN_DIR;
}

TableId parse_table_id(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  if (!s.empty() && s.front() == 'T') s.erase(0, 1);
  if (s.size() == 1 && s[0] >= '1' && s[0] <= '6') return static_cast<TableId>(s[0] - '1');
  throw std::invalid_argument("unknown table '" + std::string(name) + "' (expected T1..T6)");
}

std::string table_name(TableId id) { return "T" + std::to_string(static_cast<int>(id) + 1); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> diff_lines(std::string_view expected, std::string_view actual,
                                    std::size_t max_reports) {
  auto split = [](std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
  };
  const auto want = split(expected);
  const auto got = split(actual);
  std::vector<std::string> out;
  const std::size_t count = std::max(want.size(), got.size());
  for (std::size_t i = 0; i < count && out.size() < max_reports; ++i) {
    const std::string* w = i < want.size() ? &want[i] : nullptr;
    const std::string* g = i < got.size() ? &got[i] : nullptr;
    if (w && g && *w == *g) continue;
    out.push_back("line " + std::to_string(i + 1) + ": expected '" + (w ? *w : "<missing>") +
                  "', got '" + (g ? *g : "<missing>") + "'");
  }
  if (out.empty() && expected != actual) out.push_back("trailing bytes differ");
  return out;
}

namespace {

void compare_text(const std::filesystem::path& golden, const std::string& actual,
                  std::vector<std::string>& mismatches) {
  for (auto& m : diff_lines(read_file(golden), actual))
    mismatches.push_back(golden.filename().string() + " " + m);
}

json load_json(const std::filesystem::path& path) { return json::parse(read_file(path)); }

std::vector<unsigned> iota_ells(unsigned lo, unsigned hi) {
  std::vector<unsigned> v;
  for (unsigned e = lo; e <= hi; ++e) v.push_back(e);
  return v;
}

std::string describe(const std::vector<EllInterval>& intervals) {
  std::string s = "[";
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(intervals[i].lo) + ".." +
         (intervals[i].hi ? std::to_string(*intervals[i].hi) : std::string("inf"));
  }
  return s + "]";
}

TableReport landscape(TableId id, unsigned ell_lo, unsigned ell_hi, const TableOptions& opt,
                      bool check) {
  TableReport r;
  r.id = id;
  const auto grid = exception_grid(1, 30, ell_lo, ell_hi, opt.scan);
  r.rendered = render(grid, opt.format);
  if (check) {
    r.checked = true;
    const auto file = id == TableId::T1 ? "table1.tex" : "table2.tex";
    compare_text(opt.golden_dir / file, render(grid, Format::latex), r.mismatches);
  }
  return r;
}

TableReport classification(const TableOptions& opt, bool check) {
  TableReport r;
  r.id = TableId::T3;
  std::vector<ExceptionClassification> rows;
  for (unsigned n = 1; n <= 20; ++n) rows.push_back(classify_exceptions(n));
  r.rendered = render(rows, opt.format);
  if (!check) return r;
  r.checked = true;
  const auto golden = load_json(opt.golden_dir / "table3.json");
  for (const auto& row : golden.at("rows")) {
    const unsigned n = row.at("n").get<unsigned>();
    std::vector<EllInterval> want;
    for (const auto& iv : row.at("exceptions")) {
      EllInterval e;
      e.lo = iv.at(0).get<unsigned>();
      if (!iv.at(1).is_null()) e.hi = iv.at(1).get<unsigned>();
      want.push_back(e);
    }
    const auto& got = rows.at(n - 1);
    if (got.exceptions != want)
      r.mismatches.push_back("n=" + std::to_string(n) + ": expected " + describe(want) + ", got " +
                             describe(got.exceptions));
    if (got.tail == TailMarker::unverified)
      r.mismatches.push_back("n=" + std::to_string(n) + ": tail sign not certified at ceil(L(n))");
  }
  return r;
}

TableReport patterns(const TableOptions& opt, bool check) {
  TableReport r;
  r.id = TableId::T4;
  std::vector<unsigned> ells{1};
  for (unsigned e = 3; e <= 10; ++e) ells.push_back(e);
  const auto cols = scan_columns(ells, 1, opt.pattern_n_max, opt.scan);
  std::vector<FixedEllPattern> rows;
  rows.push_back(pattern_from_column(cols.front(), 1));
  rows.push_back(fixed_ell_pattern(2, opt.ell2_n_max));
  for (std::size_t i = 1; i < cols.size(); ++i) rows.push_back(pattern_from_column(cols[i], 1));
  r.rendered = render(rows, opt.format);
  if (!check) return r;
  r.checked = true;
  const auto golden = load_json(opt.golden_dir / "table4.json");
  for (const auto& row : golden.at("rows")) {
    const unsigned ell = row.at("ell").get<unsigned>();
    const auto want = row.at("log_convex").get<std::vector<std::size_t>>();
    const auto& got = rows.at(ell - 1);
    if (got.log_convex != want)
      r.mismatches.push_back("ell=" + std::to_string(ell) + ": log-convex set differs within n <= " +
                             std::to_string(got.n_max));
  }
  return r;
}

TableReport smallest_starts(const TableOptions& opt, bool check) {
  TableReport r;
  r.id = TableId::T5;
  const auto rows = smallest_logconcave_starts(iota_ells(1, 40), opt.n_check, opt.scan);
  r.rendered = render(rows, opt.format);
  if (check) {
    r.checked = true;
    compare_text(opt.golden_dir / "table5.tex", render(rows, Format::latex), r.mismatches);
  }
  return r;
}

TableReport thresholds(const TableOptions& opt, bool check) {
  TableReport r;
  r.id = TableId::T6;
  std::vector<ThresholdBound> rows;
  for (unsigned n = 1; n <= 20; ++n) rows.push_back(L_threshold(n));
  r.rendered = render(rows, opt.format);
  if (check) {
    r.checked = true;
    compare_text(opt.golden_dir / "table6.tex", render(rows, Format::latex), r.mismatches);
    compare_text(opt.golden_dir / "table6.json", render(rows, Format::json), r.mismatches);
  }
  return r;
}

}  // namespace

TableReport build_table(TableId id, const TableOptions& options, bool check) {
  switch (id) {
    case TableId::T1: return landscape(id, 0, 20, options, check);
    case TableId::T2: return landscape(id, 20, 40, options, check);
    case TableId::T3: return classification(options, check);
    case TableId::T4: return patterns(options, check);
    case TableId::T5: return smallest_starts(options, check);
    case TableId::T6: return thresholds(options, check);
  }
  throw std::invalid_argument("unknown table id");
}

}  // namespace commtuples
