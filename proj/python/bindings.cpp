#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyconj/descartes.hpp"
#include "polyconj/error.hpp"
#include "polyconj/expsum.hpp"
#include "polyconj/fields.hpp"
#include "polyconj/findings.hpp"
#include "polyconj/jensen.hpp"
#include "polyconj/rolle.hpp"
#include "polyconj/roots.hpp"
#include "polyconj/sos.hpp"
#include "polyconj/tropical.hpp"

namespace py = pybind11;
using namespace polyconj;

namespace {

// Values cross the boundary as JSON so exact rationals stay strings.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

RatPoly poly_arg(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_poly(o.cast<std::string>());
  return poly_from_json(from_py(o));
}

json finding_dict(const findings::Finding& f) { return findings::to_json(f); }

}  // namespace

PYBIND11_MODULE(_polyconj, m) {
  m.doc() = "Exact and numeric checks on real-rooted polynomials";
  m.attr("__version__") = findings::artifact_version();
  m.attr("SCHEMA_VERSION") = findings::kSchemaVersion;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // Polynomials are given as "x^2 - 2" or an ascending coefficient list.
  m.def("sturm_count", [](const py::object& p) { return sturm_count(poly_arg(p)).count; },
        "Distinct real zeros, counted exactly.");
  m.def("real_zeros_with_multiplicity", [](const py::object& p) { return count_with_multiplicity(poly_arg(p)); });
  m.def("is_real_rooted_simple", [](const py::object& p) { return is_real_rooted_simple(poly_arg(p)); });

  m.def("descartes_pair", [](const std::string& pattern) {
    auto pr = descartes::descartes_pair(descartes::SignPattern::parse(pattern));
    return py::make_tuple(pr.pos, pr.neg);
  });
  m.def(
      "realize",
      [](const std::string& pattern, int pos, int neg, std::uint64_t budget, std::uint64_t seed) {
        auto r = descartes::realize_search(descartes::SignPattern::parse(pattern), {pos, neg}, budget, seed);
        return to_py({{"realized", r.realized},
                      {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
                      {"trials", r.trials},
                      {"law", r.law}});
      },
      py::arg("pattern"), py::arg("pos"), py::arg("neg"), py::arg("budget") = 10000, py::arg("seed") = 0);

  m.def("tropical_bounds", [](const py::object& p) {
    auto b = tropical::check_bounds(poly_arg(p));
    return to_py({{"real_zeros", b.real_zeros},
                  {"corner_bound", b.corner_bound},
                  {"vtilde", b.vtilde},
                  {"vc", b.vc},
                  {"violation", b.any_violation()}});
  });

  m.def("phi_expand", [](const py::object& p) {
    json out = json::array();
    for (const auto& q : jensen::phi_expand(poly_arg(p))) out.push_back(to_json(q));
    return to_py(out);
  });
  m.def("jensen_literal", [](const py::object& p, int i) { return to_py(to_json(jensen::jensen_literal(poly_arg(p), i))); });

  m.def("flat_count", [](int n) { return py::int_(py::str(rolle::flat_count(n).get_str())); });
  m.def("enumerate_sequences", &rolle::enumerate_sequences);

  m.def(
      "psi_maxima",
      [](const py::object& config, int resolution) {
        auto r = fields::psi_local_maxima(psi_config_from_json(from_py(config)), resolution);
        return to_py({{"count", r.count()},
                      {"locations", r.locations},
                      {"indeterminate", r.indeterminate},
                      {"window_certified", r.window_certified}});
      },
      py::arg("config"), py::arg("resolution") = 20);
  m.def(
      "equilibria",
      [](const py::object& config, const py::object& options) {
        fields::EquilibriumOptions opts;
        if (!options.is_none()) opts = equilibrium_options_from_json(from_py(options));
        auto set = fields::find_equilibria(charge_config_from_json(from_py(config)), opts);
        json pts = json::array();
        for (const auto& p : set.points) pts.push_back(std::vector<double>(p.x.data(), p.x.data() + p.x.size()));
        return to_py({{"points", pts}, {"suspected_curve", set.suspected_curve}, {"nondegenerate", set.nondegenerate()}});
      },
      py::arg("config"), py::arg("options") = py::none());

  m.def(
      "count_real_zeros",
      [](const py::object& a, const py::object& c) {
        auto z = expsum::count_real_zeros(expsum::solution(complex_list_from_json(from_py(a)), complex_list_from_json(from_py(c))));
        return to_py({{"count", z.count}, {"zeros", z.zeros}, {"indeterminate", z.indeterminate}});
      },
      "a and c are lists of [re, im] pairs.");
  m.def("max_zero_search", [](int k, int trials, std::uint64_t seed) {
    auto r = expsum::max_zero_search(k, trials, seed);
    return to_py({{"max_count", r.max_count}, {"accepted", r.accepted}, {"histogram", r.histogram},
                  {"witness_trial", r.witness ? json(r.witness->trial) : json(nullptr)}});
  });

  m.def("sos_grid", [](int k, int l) {
    auto g = sos::grid_sos(k, l);
    auto v = sos::verify_isolated(g);
    return to_py({{"zero_count", g.zero_count()}, {"ok", v.ok}, {"zero_set_exact", v.zero_set_exact}});
  });

  m.def("known_conjectures", &findings::known_conjectures);
  m.def(
      "evaluate",
      [](const std::string& id, const py::object& input, const py::object& tol) {
        auto e = findings::evaluate(id, from_py(input), tol.is_none() ? json::object() : from_py(tol));
        return to_py({{"observation", e.observation},
                      {"violation", e.violation},
                      {"severity", findings::to_string(e.severity)},
                      {"certified", e.certified}});
      },
      py::arg("conjecture_id"), py::arg("input"), py::arg("tolerances") = py::none());
  m.def(
      "make_finding",
      [](const std::string& id, const py::object& input, const py::object& tol, std::uint64_t seed, std::uint64_t trial) {
        return to_py(finding_dict(
            findings::make_finding(id, from_py(input), tol.is_none() ? json::object() : from_py(tol), seed, trial)));
      },
      py::arg("conjecture_id"), py::arg("input"), py::arg("tolerances") = py::none(), py::arg("seed") = 0,
      py::arg("trial_index") = 0);
  m.def(
      "replay",
      [](const py::object& finding, const py::object& tol) {
        std::optional<json> t;
        if (!tol.is_none()) t = from_py(tol);
        auto r = findings::replay(findings::finding_from_json(from_py(finding)), t);
        return to_py({{"status", findings::to_string(r.status)}, {"recorded", r.recorded}, {"observed", r.observed}});
      },
      py::arg("finding"), py::arg("tolerances") = py::none());
  m.def("ledger_append", [](const std::string& path, const py::object& finding) {
    findings::Ledger(path).append(findings::finding_from_json(from_py(finding)));
  });
  m.def("ledger_read", [](const std::string& path) {
    json out = json::array();
    for (const auto& f : findings::Ledger(path).read()) out.push_back(finding_dict(f));
    return to_py(out);
  });
}
