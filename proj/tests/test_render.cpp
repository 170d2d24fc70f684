#include "commtuples/render.hpp"
#include "commtuples/tables.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace commtuples;

namespace {

std::filesystem::path golden(const char* name) { return TableOptions::default_golden_dir() / name; }

std::vector<ThresholdBound> all_thresholds() {
  std::vector<ThresholdBound> rows;
  for (unsigned n = 1; n <= 20; ++n) rows.push_back(L_threshold(n));
  return rows;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("latex") == Format::latex);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("json") == Format::json);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("LaTeX"), std::invalid_argument);
}

TEST_CASE("landscape LaTeX matches the golden files byte for byte") {
  CHECK(render(exception_grid(1, 30, 0, 20), Format::latex) == read_file(golden("table1.tex")));
  CHECK(render(exception_grid(1, 30, 20, 40), Format::latex) == read_file(golden("table2.tex")));
}

TEST_CASE("empty grid CSV is the header only") {
  CHECK(render(ExceptionGrid(), Format::csv) == "n,ell,sign\n");
}

TEST_CASE("grid CSV and JSON") {
  const auto grid = exception_grid(1, 3, 1, 2);
  CHECK(render(grid, Format::csv) ==
        "n,ell,sign\n1,1,0\n1,2,-1\n2,1,0\n2,2,1\n3,1,0\n3,2,-1\n");
  const auto j = nlohmann::json::parse(render(grid, Format::json));
  CHECK(j["signs"][0] == "0-");
  CHECK(j["signs"][1] == "0+");
}

TEST_CASE("threshold table renders to the goldens") {
  const auto rows = all_thresholds();
  CHECK(render(rows, Format::json) == read_file(golden("table6.json")));
  CHECK(render(rows, Format::latex) == read_file(golden("table6.tex")));
  const auto csv = render(rows, Format::csv);
  CHECK(csv.rfind("n,kind,ceiling,certified_sign\n1,L,7,negative\n", 0) == 0);
}

TEST_CASE("series renderers") {
  CHECK(render(n_series(0, 3), Format::csv) == "n,N\n0,1\n1,1\n2,1/2\n3,1/6\n");
  const auto g = render(g_table_by_recurrence(3, 2), Format::json);
  CHECK(nlohmann::json::parse(g)["g"] == nlohmann::json::array({"1", "7"}));
  const auto poly = orbifold_polynomial(2, 2, g_table_by_recurrence(2, 2));
  const auto pj = nlohmann::json::parse(render(poly, Format::json));
  CHECK(pj["coefficients"] == nlohmann::json::array({"0", "3/2", "1/2"}));
}

TEST_CASE("classification JSON") {
  const auto j = to_json(classify_exceptions(17));
  CHECK(j["n"] == 17);
  CHECK(j["tail"] == "log_concave");
  CHECK(j["exceptions"].size() == 2);
}

TEST_CASE("rendering does not depend on the worker count") {
  ScanOptions three;
  three.workers = 3;
  for (auto format : {Format::latex, Format::csv, Format::json})
    CHECK(render(exception_grid(1, 30, 0, 40, three), format) ==
          render(exception_grid_serial(1, 30, 0, 40), format));
}

TEST_CASE("diff_lines reports differing lines") {
  CHECK(diff_lines("a\nb\n", "a\nb\n").empty());
  CHECK(diff_lines("a\nb\n", "a\nc\n").size() == 1);
  CHECK_FALSE(diff_lines("a\n", "a\nb\n").empty());
}

TEST_CASE("table identifiers") {
  CHECK(parse_table_id("T3") == TableId::T3);
  CHECK(parse_table_id("t5") == TableId::T5);
  CHECK(parse_table_id("6") == TableId::T6);
  CHECK_THROWS_AS(parse_table_id("T7"), std::invalid_argument);
  CHECK(table_name(TableId::T2) == "T2");
}
