// commtuples: exact counts of commuting permutation tuples, their
// log-concavity scans, and reproduction of the published tables.
//
// Exit codes: 0 success, 1 verification mismatch or runtime failure,
// 2 usage error.

#include "commtuples/bounds.hpp"
#include "commtuples/checkpoint.hpp"
#include "commtuples/commuting_counts.hpp"
#include "commtuples/logconcavity.hpp"
#include "commtuples/oracle.hpp"
#include "commtuples/render.hpp"
#include "commtuples/subgroup_growth.hpp"
#include "commtuples/tables.hpp"
#include "commtuples/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace ct = commtuples;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
  }
};

void add_format(CLI::App* cmd, std::string& format, const std::string& fallback) {
  format = fallback;
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"latex", "csv", "json"}))
      ->capture_default_str();
}

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("-o,--output", out.path, "Write to a file instead of stdout");
}

ct::ScanOptions scan_options(unsigned workers, const std::string& checkpoint) {
  ct::ScanOptions o;
  o.workers = workers;
  if (!checkpoint.empty()) o.checkpoint = checkpoint;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of commuting l-tuples in S_n and their log-concavity"};
  app.set_config("--config", "", "TOML/INI file with option defaults (flags take precedence)");
  app.require_subcommand(1);
  app.fallthrough();

  unsigned workers = 1;
  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("-j,--workers", workers, "Parallel columns")
        ->envname("COMMTUPLES_WORKERS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  // g
  auto* g_cmd = app.add_subcommand("g", "Subgroup growth g_ell(1..nmax)");
  unsigned g_ell = 2;
  std::size_t g_nmax = 10;
  std::string g_method = "sieve";
  std::string g_format;
  Output g_out;
  g_cmd->add_option("--ell", g_ell)->required();
  g_cmd->add_option("--nmax", g_nmax)->required()->check(CLI::PositiveNumber);
  g_cmd->add_option("--method", g_method)
      ->check(CLI::IsMember({"sieve", "multiplicative", "both"}))
      ->capture_default_str();
  add_format(g_cmd, g_format, "csv");
  add_output(g_cmd, g_out);

  // count
  auto* count_cmd = app.add_subcommand("count", "N_ell(0..nmax) by the exact recurrence");
  unsigned count_ell = 2;
  std::size_t count_nmax = 10;
  std::string count_format;
  Output count_out;
  count_cmd->add_option("--ell", count_ell)->required();
  count_cmd->add_option("--nmax", count_nmax)->required()->check(CLI::PositiveNumber);
  add_format(count_cmd, count_format, "csv");
  add_output(count_cmd, count_out);

  // poly
  auto* poly_cmd = app.add_subcommand("poly", "Coefficients of the orbifold polynomial P_n");
  unsigned poly_ell = 2;
  std::size_t poly_n = 2;
  std::string poly_format;
  poly_cmd->add_option("--ell", poly_ell)->required();
  poly_cmd->add_option("--n", poly_n)->required();
  add_format(poly_cmd, poly_format, "json");

  // delta
  auto* delta_cmd = app.add_subcommand("delta", "Exact Delta_ell(n)");
  unsigned delta_ell = 2;
  std::size_t delta_n = 1;
  delta_cmd->add_option("--ell", delta_ell)->required();
  delta_cmd->add_option("--n", delta_n)->required()->check(CLI::PositiveNumber);

  // table
  auto* table_cmd = app.add_subcommand("table", "Reproduce a published table (T1..T6)");
  std::string table_id;
  std::string table_format;
  bool table_check = false;
  std::size_t table_ncheck = 1000;
  std::size_t table_ell2 = 10000;
  std::size_t table_pattern = 2000;
  std::string table_checkpoint;
  std::string table_golden;
  Output table_out;
  table_cmd->add_option("id", table_id, "T1..T6")->required();
  add_format(table_cmd, table_format, "latex");
  table_cmd->add_flag("--check", table_check, "Compare with the golden file; exit 1 on mismatch");
  table_cmd->add_option("--ncheck", table_ncheck, "T5 verification window")->capture_default_str();
  table_cmd->add_option("--ell2-nmax", table_ell2, "T4 window for ell = 2")->capture_default_str();
  table_cmd->add_option("--pattern-nmax", table_pattern, "T4 window for ell != 2")->capture_default_str();
  table_cmd->add_option("--checkpoint", table_checkpoint, "Resumable column checkpoint file");
  table_cmd->add_option("--golden-dir", table_golden, "Directory with golden tables");
  add_workers(table_cmd);
  add_output(table_cmd, table_out);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Exceptions in ell for fixed n");
  unsigned classify_n = 1;
  std::optional<unsigned> classify_window;
  std::string classify_format;
  classify_cmd->add_option("--n", classify_n)->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--window", classify_window, "Largest ell scanned (default max(60, ceil L(n)))");
  add_format(classify_cmd, classify_format, "json");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Sign grid of Delta_ell(n)");
  std::size_t scan_nlo = 1;
  std::size_t scan_nhi = 30;
  unsigned scan_ello = 0;
  unsigned scan_elhi = 20;
  std::string scan_format;
  std::string scan_checkpoint;
  Output scan_out;
  scan_cmd->add_option("--nlo", scan_nlo)->capture_default_str()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--nhi", scan_nhi)->capture_default_str();
  scan_cmd->add_option("--ell-lo", scan_ello)->capture_default_str();
  scan_cmd->add_option("--ell-hi", scan_elhi)->capture_default_str();
  scan_cmd->add_option("--checkpoint", scan_checkpoint, "Resumable column checkpoint file");
  add_format(scan_cmd, scan_format, "csv");
  add_workers(scan_cmd);
  add_output(scan_cmd, scan_out);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Growth constants and thresholds as JSON");
  unsigned bounds_nmin = 1;
  unsigned bounds_nmax = 20;
  bool bounds_proof_text = false;
  bounds_cmd->add_option("--nmin", bounds_nmin)->capture_default_str()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--nmax", bounds_nmax)->capture_default_str();
  bounds_cmd->add_flag("--n20-proof-constant", bounds_proof_text,
                       "Use C2(20) instead of 1/(6! 2^6) in the n = 20 threshold");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites (JSON report)");
  std::string verify_suite = "all";
  verify_cmd->add_option("suite", verify_suite)
      ->check(CLI::IsMember({"oracle", "bounds", "theorem", "all"}))
      ->capture_default_str();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Count commuting tuples in S_n directly");
  unsigned oracle_n = 3;
  unsigned oracle_ell = 2;
  std::string oracle_method = "both";
  oracle_cmd->add_option("--n", oracle_n)->required();
  oracle_cmd->add_option("--ell", oracle_ell)->required();
  oracle_cmd->add_option("--method", oracle_method)
      ->check(CLI::IsMember({"brute", "centralizer", "both"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (g_cmd->parsed()) {
      const auto format = ct::parse_format(g_format);
      const bool sieve = g_method != "multiplicative";
      const bool mult = g_method != "sieve";
      std::optional<ct::GSeries> a, b;
      if (sieve) a = ct::g_table_by_recurrence(g_ell, g_nmax);
      if (mult) b = ct::g_table_multiplicative(g_ell, g_nmax);
      if (a && b) {
        for (std::size_t n = 1; n <= g_nmax; ++n) {
          if ((*a)[n] != (*b)[n]) {
            std::cerr << "methods disagree at n=" << n << ": sieve " << (*a)[n] << ", multiplicative "
                      << (*b)[n] << '\n';
            return kMismatch;
          }
        }
      }
      g_out.write(ct::render(a ? *a : *b, format));
    } else if (count_cmd->parsed()) {
      count_out.write(ct::render(ct::n_series(count_ell, count_nmax), ct::parse_format(count_format)));
    } else if (poly_cmd->parsed()) {
      const auto g = ct::g_table_by_recurrence(poly_ell, poly_n < 1 ? 1 : poly_n);
      std::cout << ct::render(ct::orbifold_polynomial(poly_ell, poly_n, g), ct::parse_format(poly_format));
    } else if (delta_cmd->parsed()) {
      const auto series = ct::n_series(delta_ell, delta_n + 1);
      const auto d = ct::delta(delta_ell, delta_n, series);
      nlohmann::json j{{"n", delta_n},
                       {"ell", delta_ell},
                       {"delta", ct::to_string(d)},
                       {"sign", ct::sign_name(ct::sign_of(d))},
                       {"exception", sgn(d) < 0}};
      std::cout << j.dump(2) << '\n';
    } else if (table_cmd->parsed()) {
      ct::TableOptions opt;
      opt.format = ct::parse_format(table_format);
      opt.scan = scan_options(workers, table_checkpoint);
      opt.n_check = table_ncheck;
      opt.ell2_n_max = table_ell2;
      opt.pattern_n_max = table_pattern;
      if (!table_golden.empty()) opt.golden_dir = table_golden;
      const auto report = ct::build_table(ct::parse_table_id(table_id), opt, table_check);
      table_out.write(report.rendered);
      if (table_check) {
        for (const auto& m : report.mismatches) std::cerr << "mismatch: " << m << '\n';
        std::cerr << ct::table_name(report.id) << (report.ok() ? ": golden match\n" : ": MISMATCH\n");
        if (!report.ok()) return kMismatch;
      }
    } else if (classify_cmd->parsed()) {
      ct::ExceptionClassification c;
      if (classify_window) {
        c = ct::classify_exceptions(classify_n, *classify_window, ct::L_threshold(classify_n));
      } else {
        c = ct::classify_exceptions(classify_n);
      }
      std::cout << ct::render(std::vector<ct::ExceptionClassification>{c}, ct::parse_format(classify_format));
    } else if (scan_cmd->parsed()) {
      const auto grid = ct::exception_grid(scan_nlo, scan_nhi, scan_ello, scan_elhi,
                                           scan_options(workers, scan_checkpoint));
      scan_out.write(ct::render(grid, ct::parse_format(scan_format)));
    } else if (bounds_cmd->parsed()) {
      const auto variant = bounds_proof_text ? ct::N20Constant::proof_text : ct::N20Constant::published;
      nlohmann::json rows = nlohmann::json::array();
      for (unsigned n = bounds_nmin; n <= bounds_nmax; ++n) {
        nlohmann::json row{{"n", n}, {"L", ct::to_json(ct::L_threshold(n, variant))}};
        if (n >= 2) {
          row["profile"] = ct::to_json(ct::growth_profile(n));
          row["kappa"] = ct::to_json(ct::kappa(n));
        }
        rows.push_back(row);
      }
      std::cout << nlohmann::json{{"rows", rows}}.dump(2) << '\n';
    } else if (verify_cmd->parsed()) {
      const auto results = ct::run_verify_suite(verify_suite);
      const auto report = ct::to_json(results);
      std::cout << report.dump(2) << '\n';
      if (!report.at("pass").get<bool>()) return kMismatch;
    } else if (oracle_cmd->parsed()) {
      nlohmann::json runs = nlohmann::json::array();
      std::optional<ct::Integer> first;
      bool agree = true;
      auto record = [&](const ct::OracleResult& r) {
        runs.push_back(ct::to_json(r));
        if (first && *first != r.raw) agree = false;
        first = r.raw;
      };
      if (oracle_method != "centralizer") record(ct::count_commuting_tuples(oracle_n, oracle_ell));
      if (oracle_method != "brute") record(ct::count_hom_by_centralizers(oracle_n, oracle_ell));
      std::cout << nlohmann::json{{"runs", runs}, {"agree", agree}}.dump(2) << '\n';
      if (!agree) return kMismatch;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ct::CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kOk;
}
