#include "normgeo/norm_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "normgeo/errors.hpp"

namespace normgeo {

using nlohmann::json;

namespace {

double finite_number(const json& v, const std::string& what) {
  if (!v.is_number()) throw SpecParseError(what + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SpecParseError(what + " must be finite");
  return d;
}

Exponent parse_exponent(const json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return Exponent::infinity();
    throw SpecParseError("\"p\" must be a number or \"inf\"");
  }
  const double p = finite_number(v, "\"p\"");
  if (p < 1.0) throw SpecParseError("\"p\" must be >= 1 (got " + v.dump() + ")");
  return Exponent(p);
}

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::set<std::string>& required, const std::string& kind) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw SpecParseError("unknown key \"" + key + "\" for kind " + kind);
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) throw SpecParseError("missing key \"" + key + "\" for kind " + kind);
  }
}

}  // namespace

NormSpec parse_norm_spec(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw SpecParseError("norm spec must be a JSON object");
  if (!obj.contains("kind") || !obj["kind"].is_string()) throw SpecParseError("missing string key \"kind\"");
  const std::string kind = obj["kind"].get<std::string>();

  if (!obj.contains("dim") || !obj["dim"].is_number_integer() || obj["dim"].get<long long>() < 1) {
    throw SpecParseError("\"dim\" must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(obj["dim"].get<long long>());

  if (kind == "lp") {
    require_keys(obj, {"kind", "p", "dim"}, {"p"}, kind);
    return NormSpec::lp(parse_exponent(obj["p"]), dim);
  }
  if (kind == "weighted_lp") {
    require_keys(obj, {"kind", "p", "weights", "dim"}, {"p", "weights"}, kind);
    const json& w = obj["weights"];
    if (!w.is_array()) throw SpecParseError("\"weights\" must be an array");
    std::vector<double> weights;
    for (const auto& e : w) weights.push_back(finite_number(e, "weight"));
    if (weights.size() != dim) throw SpecParseError("\"weights\" length does not match \"dim\"");
    return NormSpec::weighted_lp(parse_exponent(obj["p"]), std::move(weights));
  }
  if (kind == "quadratic") {
    require_keys(obj, {"kind", "gram", "dim"}, {"gram"}, kind);
    const json& g = obj["gram"];
    if (!g.is_array() || g.size() != dim) throw SpecParseError("\"gram\" must have dim rows");
    std::vector<std::vector<double>> rows;
    for (const auto& row : g) {
      if (!row.is_array() || row.size() != dim) throw SpecParseError("\"gram\" rows must have dim entries");
      std::vector<double> r;
      for (const auto& e : row) r.push_back(finite_number(e, "gram entry"));
      rows.push_back(std::move(r));
    }
    return NormSpec::quadratic(SquareMatrix(rows));
  }
  throw SpecParseError("unknown norm kind \"" + kind + "\"");
}

NormSpec load_norm_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_norm_spec(ss.str());
}

json norm_spec_to_json(const NormSpec& spec) {
  json out;
  auto p_json = [&]() -> json {
    if (spec.p.is_infinite()) return "inf";
    return spec.p.value();
  };
  switch (spec.kind) {
    case NormKind::Lp:
      out = {{"kind", "lp"}, {"p", p_json()}, {"dim", spec.dim}};
      break;
    case NormKind::WeightedLp:
      out = {{"kind", "weighted_lp"}, {"p", p_json()}, {"weights", spec.weights}, {"dim", spec.dim}};
      break;
    case NormKind::Quadratic:
      out = {{"kind", "quadratic"}, {"gram", spec.gram ? spec.gram->rows() : std::vector<std::vector<double>>{}},
             {"dim", spec.dim}};
      break;
  }
  return out;
}

}  // namespace normgeo
