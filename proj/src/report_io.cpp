#include "normgeo/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "normgeo/norm_io.hpp"

namespace normgeo {

using nlohmann::json;

std::string tool_version() { return NORMGEO_VERSION; }

json vector_to_json(const Vector& v) { return json(std::vector<double>(v.coords().begin(), v.coords().end())); }

json witness_to_json(const Witness& w) {
  json out{{"x", vector_to_json(w.x)}, {"y", vector_to_json(w.y)}};
  out["t"] = w.t ? json(*w.t) : json(nullptr);
  out["gamma"] = w.gamma ? json(*w.gamma) : json(nullptr);
  return out;
}

json to_json(const InequalityReport& r) {
  json out{{"id", std::string(to_string(r.id))},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"slack", r.slack},
           {"witness", witness_to_json(r.witness)},
           {"universal", r.universal}};
  if (r.batch) {
    out["witness"]["trials"] = r.batch->trials;
    out["witness"]["seed"] = r.batch->seed;
    out["witness"]["trial_index"] = r.batch->trial_index;
  }
  return out;
}

json to_json(const AxiomReport& r) {
  return json{{"trials", r.trials},
              {"worst_homogeneity_defect", r.worst_homogeneity_defect},
              {"worst_triangle_slack", r.worst_triangle_slack},
              {"worst_positivity", r.worst_positivity},
              {"tol", r.tol},
              {"passed", r.passed},
              {"seed", r.seed}};
}

json to_json(const SearchResult& r) {
  return json{{"objective", std::string(to_string(r.objective))},
              {"best_violation", r.best_violation},
              {"best_slack", r.best_slack},
              {"witness", witness_to_json(r.witness)},
              {"evaluations", r.evaluations},
              {"restarts_used", r.restarts_used},
              {"skipped", r.skipped},
              {"seed", r.seed}};
}

json to_json(const PairEstimate& e, const char* value_key) {
  return json{{value_key, e.value},
              {"witness", {{"x", vector_to_json(e.x)}, {"y", vector_to_json(e.y)}}},
              {"evaluations", e.evaluations},
              {"skipped", e.skipped},
              {"restarts", e.restarts}};
}

json to_json(const SearchConfig& c) {
  return json{{"restarts", c.restarts},
              {"iters_per_restart", c.iters_per_restart},
              {"dim", c.dim},
              {"seed", c.seed},
              {"radius_range", {c.radius.lo, c.radius.hi}},
              {"step_init", c.step_init},
              {"step_shrink", c.step_shrink},
              {"violation_threshold", c.violation_threshold}};
}

json to_json(const DetectionVerdict& v) {
  json per = json::object();
  for (const auto& [id, r] : v.per_objective) per[std::string(to_string(id))] = to_json(r);
  json out{{"verdict", std::string(to_string(v.verdict))},
           {"per_objective", per},
           {"parallelogram", to_json(v.parallelogram, "defect")},
           {"dw", to_json(v.dw, "estimate")},
           {"dw_estimate", v.dw.value},
           {"parallelogram_defect", v.parallelogram.value},
           {"search_insufficient", v.search_insufficient},
           {"config", to_json(v.config)},
           {"wall_time_s", v.wall_time_s}};
  std::ostringstream note;
  if (v.verdict == Verdict::Consistent) {
    note << "no violation found under budget " << v.config.restarts << "x" << v.config.iters_per_restart
         << ", seed " << v.config.seed;
  } else {
    note << "violation witnessed; see per_objective";
  }
  out["note"] = note.str();
  return out;
}

std::string format_double(double value) {
  std::ostringstream os;
  os << json(value).dump();
  return os.str();
}

std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "t,n_xy,n_yx\n";
  char buf[96];
  for (const auto& p : curve) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.t(), p.xy.value, p.yx.value);
    out += buf;
  }
  return out;
}

}  // namespace normgeo
