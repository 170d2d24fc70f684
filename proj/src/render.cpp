#include "commtuples/render.hpp"

#include <sstream>
#include <stdexcept>

namespace commtuples {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "latex") return Format::latex;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected latex, csv or json)");
}

std::string tail_name(TailMarker t) {
  switch (t) {
    case TailMarker::exceptional: return "exceptional";
    case TailMarker::log_concave: return "log_concave";
    case TailMarker::unverified: return "unverified";
  }
  return "unknown";
}

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string interval_latex(const EllInterval& iv) {
  std::ostringstream s;
  if (iv.hi && *iv.hi == iv.lo) {
    s << "\\ell = " << iv.lo;
  } else {
    s << iv.lo << " \\leq \\ell";
    if (iv.hi) s << " \\leq " << *iv.hi;
  }
  return s.str();
}

std::string classification_latex(const ExceptionClassification& c) {
  if (c.exceptions.empty()) return "$\\emptyset$";
  std::string out;
  for (std::size_t i = 0; i < c.exceptions.size(); ++i) {
    if (i > 0) out += ", ";
    out += "$" + interval_latex(c.exceptions[i]) + "$";
  }
  return out;
}

std::string join(const std::vector<std::size_t>& values, const char* sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) s << (i ? sep : "") << values[i];
  return s.str();
}

const char* kind_name(ThresholdKind k) { return k == ThresholdKind::kappa ? "kappa" : "L"; }

}  // namespace

std::string render(const ExceptionGrid& grid, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::latex: {
      out << "\\begin{array}{r" << std::string(grid.cols(), 'c') << "}\n\\hline\n";
      out << "n\\backslash \\ell ";
      for (unsigned ell = grid.ell_lo(); grid.cols() > 0 && ell <= grid.ell_hi(); ++ell) out << '&' << ell;
      out << "\\\\ \\hline \\hline\n";
      for (std::size_t n = grid.n_lo(); grid.rows() > 0 && n <= grid.n_hi(); ++n) {
        out << n;
        for (unsigned ell = grid.ell_lo(); ell <= grid.ell_hi(); ++ell)
          out << '&' << (grid.is_exception(n, ell) ? "\\bullet " : "");
        out << "\\\\" << (n == grid.n_hi() ? " \\hline" : "") << '\n';
      }
      out << "\\end{array}\n";
      break;
    }
    case Format::csv:
      out << "n,ell,sign\n";
      if (grid.empty()) break;
      for (std::size_t n = grid.n_lo(); n <= grid.n_hi(); ++n)
        for (unsigned ell = grid.ell_lo(); ell <= grid.ell_hi(); ++ell)
          out << n << ',' << ell << ',' << static_cast<int>(grid.sign(n, ell)) << '\n';
      break;
    case Format::json: {
      json j;
      j["n_range"] = {grid.n_lo(), grid.n_hi()};
      j["ell_range"] = {grid.ell_lo(), grid.ell_hi()};
      auto& rows = j["signs"] = json::array();
      for (std::size_t n = grid.n_lo(); !grid.empty() && n <= grid.n_hi(); ++n) {
        std::string row;
        for (unsigned ell = grid.ell_lo(); ell <= grid.ell_hi(); ++ell) row += sign_char(grid.sign(n, ell));
        rows.push_back(row);
      }
      out << dump(j);
      break;
    }
  }
  return out.str();
}

std::string render(const std::vector<ExceptionClassification>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::latex: {
      const std::size_t half = (rows.size() + 1) / 2;
      out << "\\begin{tabular}{|r|c|r|c|}\n\\hline\n$n$ & & $n$ & \\\\ \\hline\n";
      for (std::size_t i = 0; i < half; ++i) {
        out << '$' << rows[i].n << "$ & " << classification_latex(rows[i]);
        if (i + half < rows.size())
          out << " & $" << rows[i + half].n << "$ & " << classification_latex(rows[i + half]);
        else
          out << " & & ";
        out << " \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
    }
    case Format::csv:
      out << "n,ell_lo,ell_hi,tail\n";
      for (const auto& c : rows)
        for (const auto& iv : c.exceptions)
          out << c.n << ',' << iv.lo << ',' << (iv.hi ? std::to_string(*iv.hi) : "") << ','
              << tail_name(c.tail) << '\n';
      break;
    case Format::json: {
      json j = json::array();
      for (const auto& c : rows) j.push_back(to_json(c));
      out << dump(json{{"rows", j}});
      break;
    }
  }
  return out.str();
}

std::string render(const std::vector<FixedEllPattern>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::latex:
      out << "\\begin{tabular}{rll}\n\\hline\n$\\ell $&log-convex&verified for\\\\ \\hline\n";
      for (const auto& p : rows) {
        out << '$' << p.ell << "$&";
        if (p.log_convex.empty())
          out << "$\\emptyset $";
        else
          out << "$\\left\\{ " << join(p.log_convex, ",") << "\\right\\} $";
        out << "&$n\\leq " << p.n_max << "$\\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
    case Format::csv:
      out << "ell,n_max,log_convex\n";
      for (const auto& p : rows) out << p.ell << ',' << p.n_max << ',' << join(p.log_convex, " ") << '\n';
      break;
    case Format::json: {
      json j = json::array();
      for (const auto& p : rows) j.push_back({{"ell", p.ell}, {"n_max", p.n_max}, {"log_convex", p.log_convex}});
      out << dump(json{{"rows", j}});
      break;
    }
  }
  return out.str();
}

std::string render(const std::vector<StartEntry>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::latex: {
      unsigned max_ell = 0;
      for (const auto& r : rows) max_ell = std::max(max_ell, r.ell);
      const unsigned row_count = max_ell / 10 + (max_ell % 10 ? 1 : 0);
      std::vector<std::string> cells(static_cast<std::size_t>(row_count) * 10);
      for (const auto& r : rows)
        if (r.ell >= 1) cells[r.ell - 1] = std::to_string(r.n0);
      out << "\\begin{array}{rrrrrrrrrrr}\n\\hline\n\\ell _{1}\\backslash \\ell _{0}";
      for (int c = 1; c <= 10; ++c) out << '&' << c;
      out << "\\\\ \\hline \\hline\n";
      for (unsigned r = 0; r < row_count; ++r) {
        out << r * 10;
        for (unsigned c = 0; c < 10; ++c) out << '&' << cells[r * 10 + c];
        out << "\\\\" << (r + 1 == row_count ? " \\hline" : "") << '\n';
      }
      out << "\\end{array}\n";
      break;
    }
    case Format::csv:
      out << "ell,n0\n";
      for (const auto& r : rows) out << r.ell << ',' << r.n0 << '\n';
      break;
    case Format::json: {
      json j = json::array();
      for (const auto& r : rows) j.push_back({{"ell", r.ell}, {"n0", r.n0}});
      out << dump(json{{"rows", j}});
      break;
    }
  }
  return out.str();
}

std::string render(const std::vector<ThresholdBound>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::latex: {
      const std::size_t half = (rows.size() + 1) / 2;
      out << "\\begin{array}{rrrr}\n\\hline\n"
          << "n&\\left\\lceil L\\left( n\\right) \\right\\rceil &n&\\left\\lceil L\\left( n\\right) "
             "\\right\\rceil \\\\ \\hline\n";
      for (std::size_t i = 0; i < half; ++i) {
        out << rows[i].n << '&' << rows[i].value_ceiling << '&';
        if (i + half < rows.size()) out << rows[i + half].n << '&' << rows[i + half].value_ceiling;
        else out << '&';
        out << "\\\\" << (i + 1 == half ? " \\hline" : "") << '\n';
      }
      out << "\\end{array}\n";
      break;
    }
    case Format::csv:
      out << "n,kind,ceiling,certified_sign\n";
      for (const auto& b : rows)
        out << b.n << ',' << kind_name(b.kind) << ',' << b.value_ceiling << ',' << sign_name(b.certified_sign) << '\n';
      break;
    case Format::json: {
      json j = json::array();
      for (const auto& b : rows)
        j.push_back({{"n", b.n}, {"ceiling", b.value_ceiling.get_str()}, {"certified_sign", sign_name(b.certified_sign)}});
      out << dump(json{{"rows", j}});
      break;
    }
  }
  return out.str();
}

std::string render(const GSeries& g, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv: write_csv(out, g); break;
    case Format::json: {
      json values = json::array();
      for (std::size_t n = 1; n <= g.n_max(); ++n) values.push_back(g[n].get_str());
      out << dump(json{{"ell", g.ell()}, {"n_max", g.n_max()}, {"g", values}});
      break;
    }
    case Format::latex:
      for (std::size_t n = 1; n <= g.n_max(); ++n) out << "g_{" << g.ell() << "}(" << n << ") &= " << g[n] << "\\\\\n";
      break;
  }
  return out.str();
}

std::string render(const NSeries& series, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv: write_csv(out, series); break;
    case Format::json: {
      json values = json::array();
      for (std::size_t n = 0; n <= series.n_max(); ++n) values.push_back(to_string(series.value(n)));
      out << dump(json{{"ell", series.ell()}, {"n_max", series.n_max()}, {"N", values}});
      break;
    }
    case Format::latex:
      for (std::size_t n = 0; n <= series.n_max(); ++n)
        out << "N_{" << series.ell() << "}(" << n << ") &= " << to_string(series.value(n)) << "\\\\\n";
      break;
  }
  return out.str();
}

std::string render(const OrbifoldPolynomial& poly, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv:
      out << "k,coefficient\n";
      for (std::size_t k = 0; k < poly.coeffs.size(); ++k) out << k << ',' << to_string(poly.coeffs[k]) << '\n';
      break;
    case Format::json: {
      json c = json::array();
      for (const auto& q : poly.coeffs) c.push_back(to_string(q));
      out << dump(json{{"ell", poly.ell}, {"n", poly.n}, {"coefficients", c},
                       {"value_at_1", to_string(poly.evaluate(1))}});
      break;
    }
    case Format::latex: {
      bool first = true;
      for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
        if (poly.coeffs[k] == 0) continue;
        out << (first ? "" : " + ") << "\\frac{" << poly.coeffs[k].get_num() << "}{" << poly.coeffs[k].get_den() << "}";
        if (k > 0) out << " x^{" << k << "}";
        first = false;
      }
      out << (first ? "0" : "") << '\n';
      break;
    }
  }
  return out.str();
}

json to_json(const ThresholdBound& b) {
  return {{"n", b.n},
          {"kind", kind_name(b.kind)},
          {"ceiling", b.value_ceiling.get_str()},
          {"certified_sign", sign_name(b.certified_sign)},
          {"base", to_string(b.base)},
          {"argument", to_string(b.argument)}};
}

json to_json(const GrowthProfile& g) {
  json j;
  j["n"] = g.n;
  j["m1"] = g.max.m1.get_str();
  j["achieving_k"] = g.max.achieving_k;
  json mult = json::array();
  for (const auto& m : g.max.multiplicity) mult.push_back(m.get_str());
  j["multiplicity"] = mult;
  j["c1"] = to_string(g.c1);
  j["m2"] = g.m2 ? json(g.m2->get_str()) : json(nullptr);
  j["c2"] = g.c2 ? json(to_string(*g.c2)) : json(nullptr);
  j["m3"] = g.m3 ? json(g.m3->get_str()) : json(nullptr);
  return j;
}

json to_json(const OracleResult& r) {
  return {{"n", r.n},
          {"ell", r.ell},
          {"raw", r.raw.get_str()},
          {"normalized", to_string(r.normalized)},
          {"method", r.method},
          {"elapsed", r.elapsed_seconds}};
}

json to_json(const ExceptionClassification& c) {
  json intervals = json::array();
  for (const auto& iv : c.exceptions) intervals.push_back({iv.lo, iv.hi ? json(*iv.hi) : json(nullptr)});
  json j{{"n", c.n}, {"exceptions", intervals}, {"tail", tail_name(c.tail)}, {"window", c.window_ell_max}};
  j["threshold"] = c.threshold ? json(c.threshold->value_ceiling.get_str()) : json(nullptr);
  return j;
}

}  // namespace commtuples
