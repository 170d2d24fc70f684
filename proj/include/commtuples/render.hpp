#pragma once

// Deterministic text output for scan results: LaTeX in the bullet/array
// layout of the published tables, CSV, and JSON.

#include "commtuples/bounds.hpp"
#include "commtuples/commuting_counts.hpp"
#include "commtuples/logconcavity.hpp"
#include "commtuples/oracle.hpp"
#include "commtuples/subgroup_growth.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace commtuples {

enum class Format { latex, csv, json };

/// Throws std::invalid_argument on anything but latex, csv, json.
Format parse_format(std::string_view name);

std::string render(const ExceptionGrid& grid, Format format);
std::string render(const std::vector<ExceptionClassification>& rows, Format format);
std::string render(const std::vector<FixedEllPattern>& rows, Format format);
/// Smallest n0 per ell; LaTeX lays ell = 10*r + c out as row r, column c.
std::string render(const std::vector<StartEntry>& rows, Format format);
/// ceil(L(n)) (or ceil(kappa(n))) per n; LaTeX uses two column pairs.
std::string render(const std::vector<ThresholdBound>& rows, Format format);

std::string render(const GSeries& g, Format format);
std::string render(const NSeries& series, Format format);
std::string render(const OrbifoldPolynomial& poly, Format format);

nlohmann::json to_json(const ThresholdBound& b);
nlohmann::json to_json(const GrowthProfile& g);
nlohmann::json to_json(const OracleResult& r);
nlohmann::json to_json(const ExceptionClassification& c);

std::string tail_name(TailMarker t);

}  // namespace commtuples
