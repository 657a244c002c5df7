#pragma once

#include <string>

#include <json.hpp>

#include "normgeo/characterize.hpp"
#include "normgeo/functional.hpp"
#include "normgeo/inequalities.hpp"
#include "normgeo/norm.hpp"

namespace normgeo {

std::string tool_version();

nlohmann::json vector_to_json(const Vector& v);
nlohmann::json witness_to_json(const Witness& w);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const AxiomReport& r);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const PairEstimate& e, const char* value_key);
nlohmann::json to_json(const SearchConfig& c);
nlohmann::json to_json(const DetectionVerdict& v);

/// CSV with header `t,n_xy,n_yx`, values printed with 17 significant digits.
std::string curve_to_csv(const std::vector<CurvePoint>& curve);

/// Shortest text for `value` that parses back to the same double.
std::string format_double(double value);

}  // namespace normgeo
