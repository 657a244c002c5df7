#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "normgeo/characterize.hpp"
#include "normgeo/distances.hpp"
#include "normgeo/errors.hpp"
#include "normgeo/functional.hpp"
#include "normgeo/inequalities.hpp"
#include "normgeo/norm_io.hpp"
#include "normgeo/report_io.hpp"

namespace py = pybind11;
using namespace normgeo;

namespace {

// Reports cross the boundary as plain dicts with the same schema as the
// CLI's JSON output.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Vector vec(const std::vector<double>& v) { return Vector(v); }

Exponent exponent_from(const py::object& p) {
  if (py::isinstance<py::str>(p)) {
    if (p.cast<std::string>() == "inf") return Exponent::infinity();
    throw InvalidNormError("p must be a number or \"inf\"");
  }
  return Exponent(p.cast<double>());
}

InequalityId id_from(const std::string& name) {
  const auto id = inequality_from_string(name);
  if (!id) throw DomainError("unknown inequality id " + name);
  return *id;
}

SearchConfig make_config(std::size_t dim, std::uint64_t seed, std::size_t restarts, std::size_t iters,
                         unsigned workers) {
  SearchConfig c;
  c.dim = dim;
  c.seed = seed;
  c.restarts = restarts;
  c.iters_per_restart = iters;
  c.workers = workers;
  return c;
}

}  // namespace

PYBIND11_MODULE(_normgeo, m) {
  m.doc() = "C++ core of the normgeo toolkit";
  m.attr("__version__") = tool_version();

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvalidNormError>(m, "InvalidNormError", PyExc_ValueError);
  py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<Norm>(m, "Norm")
      .def_static("lp", [](const py::object& p, std::size_t dim) { return Norm(NormSpec::lp(exponent_from(p), dim)); },
                  py::arg("p"), py::arg("dim"))
      .def_static("weighted_lp",
                  [](const py::object& p, std::vector<double> w) {
                    return Norm(NormSpec::weighted_lp(exponent_from(p), std::move(w)));
                  },
                  py::arg("p"), py::arg("weights"))
      .def_static("quadratic",
                  [](const std::vector<std::vector<double>>& gram) { return Norm(NormSpec::quadratic(SquareMatrix(gram))); },
                  py::arg("gram"))
      .def_static("from_json", [](const std::string& text) { return Norm(parse_norm_spec(text)); }, py::arg("text"))
      .def("__call__", [](const Norm& n, const std::vector<double>& x) { return n.eval(x); })
      .def_property_readonly("dim", &Norm::dim)
      .def("to_json", [](const Norm& n) { return norm_spec_to_json(n.spec()).dump(); })
      .def("__repr__", [](const Norm& n) { return "<normgeo.Norm " + n.label() + ">"; });

  m.def("gram_validate", [](const std::vector<std::vector<double>>& gram) {
    const GramValidation v = gram_validate(SquareMatrix(gram));
    py::dict d;
    d["valid"] = v.valid;
    d["reason"] = v.reason;
    d["pivots"] = v.pivots;
    d["failed_pivot"] = v.failed_pivot ? py::object(py::int_(*v.failed_pivot)) : py::object(py::none());
    return d;
  });

  m.def("validate_norm_axioms",
        [](const Norm& n, std::size_t trials, std::uint64_t seed, double tol) {
          return to_python(to_json(validate_norm_axioms(n, trials, seed, tol)));
        },
        py::arg("norm"), py::arg("trials"), py::arg("seed"), py::arg("tol") = kDefaultTolerances.axiom_relative);

  m.def("n_eval", [](const Norm& n, const std::vector<double>& x, const std::vector<double>& y, double t) {
    return n_eval(n, vec(x), vec(y), t);
  });
  m.def("n_curve",
        [](const Norm& n, const std::vector<double>& x, const std::vector<double>& y, double t_min, double t_max,
           std::size_t steps) {
          std::vector<std::tuple<double, double, double>> rows;
          for (const auto& p : n_curve(n, vec(x), vec(y), t_min, t_max, steps))
            rows.emplace_back(p.t(), p.xy.value, p.yx.value);
          return rows;
        },
        py::arg("norm"), py::arg("x"), py::arg("y"), py::arg("t_min"), py::arg("t_max"), py::arg("steps"));
  m.def("one_sided_derivative",
        [](const Norm& n, const std::vector<double>& x, const std::vector<double>& y, double t, const std::string& side) {
          if (side != "left" && side != "right") throw DomainError("side must be \"left\" or \"right\"");
          return one_sided_derivative(n, vec(x), vec(y), t, side == "left" ? Side::Left : Side::Right).value;
        },
        py::arg("norm"), py::arg("x"), py::arg("y"), py::arg("t"), py::arg("side"));
  m.def("convexity_defect", [](const Norm& n, const std::vector<double>& x, const std::vector<double>& y,
                               const std::vector<double>& grid) { return convexity_defect(n, vec(x), vec(y), grid); });
  m.def("reflection_identity_defect", [](const Norm& n, const std::vector<double>& x, const std::vector<double>& y,
                                         double t) { return reflection_identity_defect(n, vec(x), vec(y), t); });
  m.def("reciprocal_order_agreement", [](const Norm& n, const std::vector<double>& x, const std::vector<double>& y,
                                         double t) { return reciprocal_order_agreement(n, vec(x), vec(y), t); });
  m.def("quadratic_difference_defect", [](const Norm& n, const std::vector<double>& x, const std::vector<double>& y,
                                          double t) { return quadratic_difference_defect(n, vec(x), vec(y), t); });

  m.def("angular_distance", [](const Norm& n, const std::vector<double>& x, const std::vector<double>& y) {
    return angular_distance(n, vec(x), vec(y));
  });
  m.def("skew_angular_distance", [](const Norm& n, const std::vector<double>& x, const std::vector<double>& y) {
    return skew_angular_distance(n, vec(x), vec(y));
  });

  m.def("inequality_ids", [] {
    std::vector<std::string> out;
    for (InequalityId id : kAllInequalities) out.emplace_back(to_string(id));
    return out;
  });
  m.def("evaluate_inequality",
        [](const std::string& id, const Norm& n, const std::vector<double>& x, const std::vector<double>& y,
           std::optional<double> t, std::optional<double> gamma) {
          return to_python(to_json(evaluate_inequality(id_from(id), n, vec(x), vec(y), t, gamma)));
        },
        py::arg("id"), py::arg("norm"), py::arg("x"), py::arg("y"), py::arg("t") = py::none(),
        py::arg("gamma") = py::none());
  m.def("batch_min_slack",
        [](const std::string& id, const Norm& n, std::size_t trials, std::uint64_t seed, unsigned workers) {
          BatchOptions opt;
          opt.workers = workers;
          py::gil_scoped_release release;
          const auto rep = batch_min_slack(id_from(id), n, trials, seed, opt);
          py::gil_scoped_acquire acquire;
          return to_python(to_json(rep));
        },
        py::arg("id"), py::arg("norm"), py::arg("trials"), py::arg("seed"), py::arg("workers") = 1);

  m.def("violation_search",
        [](const Norm& n, const std::string& objective, std::uint64_t seed, std::size_t restarts, std::size_t iters,
           unsigned workers) {
          const SearchConfig c = make_config(n.dim(), seed, restarts, iters, workers);
          py::gil_scoped_release release;
          const auto r = violation_search(n, id_from(objective), c);
          py::gil_scoped_acquire acquire;
          return to_python(to_json(r));
        },
        py::arg("norm"), py::arg("objective"), py::arg("seed"), py::arg("restarts") = 64, py::arg("iters") = 2000,
        py::arg("workers") = 0);
  m.def("dw_constant_estimate",
        [](const Norm& n, std::size_t budget, std::uint64_t seed, unsigned workers) {
          const SearchConfig c = make_config(n.dim(), seed, 64, 2000, workers);
          py::gil_scoped_release release;
          const auto e = dw_constant_estimate(n, n.dim(), budget, seed, c);
          py::gil_scoped_acquire acquire;
          return to_python(to_json(e, "estimate"));
        },
        py::arg("norm"), py::arg("budget"), py::arg("seed"), py::arg("workers") = 0);
  m.def("parallelogram_defect_search",
        [](const Norm& n, std::size_t budget, std::uint64_t seed) {
          return to_python(to_json(parallelogram_defect_search(n, n.dim(), budget, seed), "defect"));
        },
        py::arg("norm"), py::arg("budget"), py::arg("seed"));
  m.def("detect_inner_product",
        [](const Norm& n, std::uint64_t seed, std::size_t restarts, std::size_t iters, unsigned workers) {
          const SearchConfig c = make_config(n.dim(), seed, restarts, iters, workers);
          py::gil_scoped_release release;
          const auto v = detect_inner_product(n, c);
          py::gil_scoped_acquire acquire;
          return to_python(to_json(v));
        },
        py::arg("norm"), py::arg("seed"), py::arg("restarts") = 64, py::arg("iters") = 2000, py::arg("workers") = 0);
}
