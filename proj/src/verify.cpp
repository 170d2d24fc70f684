#include "commtuples/verify.hpp"

#include "commtuples/bounds.hpp"
#include "commtuples/logconcavity.hpp"
#include "commtuples/oracle.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace commtuples {

namespace {

// Body returns an empty string on success, otherwise the first failure.
CheckResult run_check(std::string name, const std::function<std::string()>& body) {
  CheckResult r;
  r.name = std::move(name);
  try {
    r.detail = body();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  if (r.pass) r.detail = "ok";
  return r;
}

std::string at(unsigned n, unsigned ell) {
  return "n=" + std::to_string(n) + " ell=" + std::to_string(ell);
}

void oracle_suite(std::vector<CheckResult>& out) {
  out.push_back(run_check("brute_force_equals_recurrence", [] {
    for (unsigned ell = 0; ell <= 3; ++ell) {
      const auto series = n_series(ell, 5);
      for (unsigned n = 1; n <= 5; ++n)
        if (count_commuting_tuples(n, ell).normalized != series.value(n)) return at(n, ell);
    }
    return std::string();
  }));
  out.push_back(run_check("centralizer_recursion_equals_recurrence", [] {
    for (unsigned ell = 0; ell <= 4; ++ell) {
      const auto series = n_series(ell, 8);
      for (unsigned n = 1; n <= 8; ++n)
        if (count_hom_by_centralizers(n, ell).normalized != series.value(n)) return at(n, ell);
    }
    return std::string();
  }));
  out.push_back(run_check("class_count_equals_partitions", [] {
    const auto p = partition_table(8);
    for (unsigned n = 1; n <= 8; ++n)
      if (Integer(static_cast<unsigned long>(conjugacy_class_count(n))) != p[n]) return "n=" + std::to_string(n);
    return std::string();
  }));
}

void bounds_suite(std::vector<CheckResult>& out) {
  out.push_back(run_check("exact_division", [] {
    for (unsigned ell = 1; ell <= 10; ++ell) n_series(ell, 300);
    return std::string();
  }));
  out.push_back(run_check("estimate_A_le_N_le_pM1", [] {
    const auto p = partition_table(60);
    for (unsigned ell = 2; ell <= 8; ++ell) {
      const auto series = n_series(ell, 60);
      for (unsigned n = 2; n <= 60; ++n) {
        const Rational value = series.value(n);
        if (a_lower_bound(ell, n) > value) return "lower " + at(n, ell);
        if (value > Rational(p[n] * ipow(max_product(n).m1, ell - 1))) return "upper " + at(n, ell);
      }
    }
    return std::string();
  }));
  out.push_back(run_check("leading_term_sandwich", [] {
    for (unsigned ell = 2; ell <= 12; ++ell) {
      const auto series = n_series(ell, 40);
      for (unsigned n = 3; n <= 40; ++n)
        if (!sandwich_check(ell, n, series).holds()) return at(n, ell);
    }
    return std::string();
  }));
  out.push_back(run_check("growth_bases_match_partition_products", [] {
    for (unsigned n = 2; n <= 40; ++n) {
      const auto products = brute_max_products(n);
      const auto closed = max_product(n);
      if (products.at(0).product != closed.m1) return "M1 n=" + std::to_string(n);
      if (n >= 3 && products.at(1).product != second_growth_base(n)) return "M2 n=" + std::to_string(n);
      const auto orderings = brute_maximizer_orderings(n);
      if (orderings.size() != closed.achieving_k.size()) return "k n=" + std::to_string(n);
      for (std::size_t i = 0; i < closed.achieving_k.size(); ++i) {
        auto it = orderings.find(closed.achieving_k[i]);
        if (it == orderings.end() || it->second != closed.multiplicity[i])
          return "multiplicity n=" + std::to_string(n);
      }
    }
    return std::string();
  }));
  out.push_back(run_check("kappa_at_least_L", [] {
    for (unsigned n = 2; n <= 20; ++n)
      if (kappa(n).value_ceiling < L_threshold(n).value_ceiling) return "n=" + std::to_string(n);
    return std::string();
  }));
  out.push_back(run_check("small_n_lemma", [] {
    for (unsigned ell = 2; ell <= 40; ++ell) {
      const auto series = n_series(ell, 4);
      if (delta_sign(1, series) != Sign::negative) return at(1, ell);
      if (delta_sign(2, series) != Sign::positive) return at(2, ell);
      const Sign want = ell <= 13 ? Sign::negative : Sign::positive;
      if (delta_sign(3, series) != want) return at(3, ell);
    }
    for (unsigned n = 1; n <= 30; ++n)
      if (delta_sign(n, n_series(1, 31)) != Sign::zero) return at(n, 1);
    return std::string();
  }));
}

void theorem_suite(std::vector<CheckResult>& out) {
  out.push_back(run_check("sign_at_ceil_L", [] {
    for (unsigned n = 1; n <= 21; ++n) {
      const auto check = verify_theorem_sign(n, L_threshold(n));
      if (!check.pass()) return at(n, check.ell) + " observed " + sign_name(check.observed);
    }
    return std::string();
  }));
  out.push_back(run_check("sign_constant_past_threshold", [] {
    for (unsigned n = 1; n <= 20; ++n) {
      const auto bound = L_threshold(n);
      const unsigned base = static_cast<unsigned>(bound.value_ceiling.get_ui());
      for (unsigned offset : {0u, 1u, 10u}) {
        const unsigned ell = base + offset;
        if (delta_sign(n, n_series(ell, n + 1)) != bound.certified_sign) return at(n, ell);
      }
    }
    return std::string();
  }));
}

}  // namespace

std::vector<CheckResult> run_verify_suite(std::string_view suite) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && suite != "oracle" && suite != "bounds" && suite != "theorem")
    throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
  if (all || suite == "oracle") oracle_suite(out);
  if (all || suite == "bounds") bounds_suite(out);
  if (all || suite == "theorem") theorem_suite(out);
  return out;
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  bool pass = true;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    pass = pass && r.pass;
  }
  return {{"pass", pass}, {"checks", checks}};
}

}  // namespace commtuples
