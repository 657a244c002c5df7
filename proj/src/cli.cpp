#include "normgeo/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <unistd.h>

#include <CLI11.hpp>

#include "normgeo/characterize.hpp"
#include "normgeo/errors.hpp"
#include "normgeo/functional.hpp"
#include "normgeo/inequalities.hpp"
#include "normgeo/norm_io.hpp"
#include "normgeo/report_io.hpp"

namespace normgeo::cli {

using nlohmann::json;

Vector parse_vector(std::string_view text) {
  std::vector<double> coords;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw DomainError("cannot parse vector component \"" + std::string(token) + "\"");
    }
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Vector(std::move(coords));
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f << contents;
    if (!f.flush()) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

struct Common {
  std::string norm_path;
  std::optional<std::size_t> dim;
  std::string out_path;
  unsigned workers = 0;
};

struct Loaded {
  NormSpec spec;
  Norm norm;
};

Loaded load(const Common& c) {
  NormSpec spec = load_norm_spec(c.norm_path);
  Norm norm(spec);
  if (c.dim && *c.dim != norm.dim()) {
    throw DomainError("--dim " + std::to_string(*c.dim) + " does not match the norm's dim " +
                      std::to_string(norm.dim()));
  }
  return {std::move(spec), std::move(norm)};
}

json envelope(const NormSpec& spec, std::optional<std::uint64_t> seed) {
  json j;
  j["tool_version"] = tool_version();
  j["spec"] = norm_spec_to_json(spec);
  j["seed"] = seed ? json(*seed) : json(nullptr);
  return j;
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  out << text;
  if (!c.out_path.empty()) write_atomically(c.out_path, text);
}

void add_common(CLI::App* sub, Common& c, bool with_dim, bool with_workers) {
  sub->add_option("norm", c.norm_path, "Norm spec JSON file")->required();
  if (with_dim) sub->add_option("--dim", c.dim, "Dimension (must match the norm)");
  sub->add_option("--out", c.out_path, "Also write the output to this file");
  if (with_workers) sub->add_option("--workers", c.workers, "Worker threads (0 = all cores)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"normgeo: norm geometry and inner-product detection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  Common common;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double tol = kDefaultTolerances.axiom_relative;
  std::string x_text, y_text;
  double t_min = 0.0, t_max = 1.0;
  std::size_t steps = 101;
  std::size_t restarts = 64, iters = 2000, budget = 64;

  CLI::App* verify = app.add_subcommand("verify", "Sample the norm axioms");
  add_common(verify, common, false, false);
  verify->add_option("--trials", trials, "Sampled triples")->default_val(1000);
  verify->add_option("--seed", seed, "RNG seed")->required();
  verify->add_option("--tol", tol, "Relative tolerance")->default_val(kDefaultTolerances.axiom_relative);

  CLI::App* curve = app.add_subcommand("curve", "Tabulate n_{x,y} and n_{y,x} as CSV");
  add_common(curve, common, false, false);
  curve->add_option("--x", x_text, "x, comma separated")->required();
  curve->add_option("--y", y_text, "y, comma separated")->required();
  curve->add_option("--t-min", t_min)->default_val(0.0);
  curve->add_option("--t-max", t_max)->default_val(1.0);
  curve->add_option("--steps", steps)->default_val(101);

  CLI::App* ineq = app.add_subcommand("inequalities", "Worst sampled slack of each universal inequality");
  add_common(ineq, common, true, true);
  ineq->add_option("--trials", trials, "Sampled pairs per inequality")->default_val(100000);
  ineq->add_option("--seed", seed, "RNG seed")->required();

  CLI::App* detect = app.add_subcommand("detect", "Search for violations of inner-product characterizations");
  add_common(detect, common, true, true);
  detect->add_option("--restarts", restarts)->default_val(64);
  detect->add_option("--iters", iters, "Pattern-search sweeps per restart")->default_val(2000);
  detect->add_option("--seed", seed, "RNG seed")->required();

  CLI::App* dw = app.add_subcommand("dw-constant", "Lower bound on the Dunkl–Williams constant");
  add_common(dw, common, true, true);
  dw->add_option("--budget", budget, "Refined restarts")->default_val(64);
  dw->add_option("--seed", seed, "RNG seed")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "normgeo: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (verify->parsed()) {
      Loaded l = load(common);
      if (trials == 0) throw DomainError("--trials must be >= 1");
      const AxiomReport rep = validate_norm_axioms(l.norm, trials, seed, tol);
      json j = envelope(l.spec, seed);
      j["report"] = to_json(rep);
      emit(j.dump(2) + "\n", common, out);
      return rep.passed ? kExitOk : kExitUniversalFailure;
    }
    if (curve->parsed()) {
      Loaded l = load(common);
      const Vector x = parse_vector(x_text);
      const Vector y = parse_vector(y_text);
      if (x.dim() != l.norm.dim() || y.dim() != l.norm.dim()) {
        throw DomainError("vector dimension does not match the norm's dim " + std::to_string(l.norm.dim()));
      }
      const std::string csv = curve_to_csv(n_curve(l.norm, x, y, t_min, t_max, steps));
      if (common.out_path.empty()) {
        out << csv;
      } else {
        write_atomically(common.out_path, csv);
      }
      return kExitOk;
    }
    if (ineq->parsed()) {
      Loaded l = load(common);
      if (trials == 0) throw DomainError("--trials must be >= 1");
      BatchOptions opt;
      opt.workers = common.workers;
      json reports = json::array();
      bool all_hold = true;
      for (InequalityId id : kUniversalInequalities) {
        const InequalityReport rep = batch_min_slack(id, l.norm, trials, seed, opt);
        all_hold = all_hold && holds_within_tolerance(rep);
        reports.push_back(to_json(rep));
      }
      json j = envelope(l.spec, seed);
      j["trials"] = trials;
      j["reports"] = reports;
      j["all_universal_hold"] = all_hold;
      emit(j.dump(2) + "\n", common, out);
      return all_hold ? kExitOk : kExitUniversalFailure;
    }
    if (detect->parsed()) {
      Loaded l = load(common);
      SearchConfig cfg;
      cfg.dim = l.norm.dim();
      cfg.restarts = restarts;
      cfg.iters_per_restart = iters;
      cfg.seed = seed;
      cfg.workers = common.workers;
      const DetectionVerdict v = detect_inner_product(l.norm, cfg);
      json j = envelope(l.spec, seed);
      j.update(to_json(v));
      emit(j.dump(2) + "\n", common, out);
      return v.verdict == Verdict::Violated ? kExitViolated : kExitOk;
    }
    if (dw->parsed()) {
      Loaded l = load(common);
      SearchConfig tuning;
      tuning.dim = l.norm.dim();
      tuning.workers = common.workers;
      const PairEstimate est = dw_constant_estimate(l.norm, l.norm.dim(), budget, seed, tuning);
      json j = envelope(l.spec, seed);
      j.update(to_json(est, "estimate"));
      j["budget"] = budget;
      emit(j.dump(2) + "\n", common, out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "normgeo: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace normgeo::cli
