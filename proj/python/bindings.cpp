#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "toricsplit/bundle_data.hpp"
#include "toricsplit/error.hpp"
#include "toricsplit/fan.hpp"
#include "toricsplit/intersection.hpp"
#include "toricsplit/report.hpp"
#include "toricsplit/solver.hpp"
#include "toricsplit/splitting.hpp"
#include "toricsplit/surface_graph.hpp"
#include "toricsplit/text_io.hpp"

namespace py = pybind11;
using namespace toricsplit;

namespace {

// GMP integers cross the boundary as decimal strings so nothing is truncated.
py::int_ to_py(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int from_py(const py::int_& v) { return Int(py::str(v).cast<std::string>()); }

py::list to_py(const std::vector<Int>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const std::vector<std::vector<Int>>& rows) {
  py::list out;
  for (const auto& r : rows) out.append(to_py(r));
  return out;
}

py::list to_py(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(to_py(m.row(i)));
  return out;
}

WeightedCircularGraph graph_from(const std::vector<std::int64_t>& weights) { return {weights}; }

Strictness strictness_from(bool strict) { return strict ? Strictness::Strict : Strictness::Default; }

py::list types_to_py(const std::vector<SplittingType>& types) {
  py::list out;
  for (const auto& t : types) {
    py::list signs;
    for (auto c : t.sign_classes) signs.append(to_string(c));
    py::dict d;
    d["permutation"] = t.permutation_id;
    d["r_prime"] = to_py(t.r_prime.transpose());
    d["x"] = to_py(t.x.transpose());
    d["classes"] = to_py(t.canonical);
    d["signs"] = signs;
    out.append(d);
  }
  return out;
}

py::dict split_result(const Fan& fan, const SplittingSystem& xi, bool strict) {
  const auto q = augmented_matrix(fan).q;
  py::dict d;
  d["xi"] = to_py(xi.degrees);
  d["q"] = to_py(q);
  d["types"] = types_to_py(find_splitting_types(fan, q, xi, strictness_from(strict)));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Splitting numbers and splitting types of equivariant bundles over toric manifolds";

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error_type)(e.kind() + ": " + e.what());
      inst.attr("kind") = e.kind();
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<Fan>(m, "Fan")
      .def_static("from_text", &parse_fan, py::arg("text"))
      .def_static("from_graph",
                  [](const std::vector<std::int64_t>& w) { return graph_to_fan(graph_from(w)); },
                  py::arg("weights"))
      .def_static("projective_space", &projective_space_fan, py::arg("n"))
      .def_property_readonly("dim", &Fan::dim)
      .def_property_readonly("rays", [](const Fan& f) { return to_py(f.rays()); })
      .def_property_readonly("cones", [](const Fan& f) { return f.max_cones(); })
      .def_property_readonly("walls",
                             [](const Fan& f) {
                               std::vector<std::vector<std::size_t>> out;
                               for (const auto& w : f.walls()) out.push_back(w.tau);
                               return out;
                             })
      .def("to_text", &format_fan)
      .def("__repr__", [](const Fan& f) {
        return "<Fan dim=" + std::to_string(f.dim()) + " rays=" + std::to_string(f.num_rays()) + ">";
      });

  m.def("canonical_form",
        [](const std::vector<std::int64_t>& w) { return canonical_form(graph_from(w)).weights; },
        py::arg("weights"));
  m.def("blowup",
        [](const std::vector<std::int64_t>& w, std::size_t i) { return blowup(graph_from(w), i).weights; },
        py::arg("weights"), py::arg("position"), "Blow up between positions i and i+1 (1-based).");
  m.def(
      "surfaces",
      [](std::size_t k, unsigned threads) {
        if (k > kHardBlowupCap) throw Error("usage", "k is capped at " + std::to_string(kHardBlowupCap));
        py::gil_scoped_release release;
        auto levels = enumerate_blowup_levels(k, threads);
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& g : levels.back()) out.push_back(g.weights);
        return out;
      },
      py::arg("k"), py::arg("threads") = 1, "Canonical graphs of k-fold blowups of CP^2.");

  m.def("q_matrix", [](const Fan& fan) { return to_py(augmented_matrix(fan).q); }, py::arg("fan"));
  m.def("tangent_splitting_system",
        [](const Fan& fan) { return to_py(splitting_system(tangent_bundle(fan)).degrees); },
        py::arg("fan"));

  m.def(
      "splitting_types",
      [](const Fan& fan, const std::vector<std::vector<py::int_>>& xi, bool strict) {
        SplittingSystem sys;
        for (const auto& row : xi) {
          std::vector<Int> r;
          for (const auto& d : row) r.push_back(from_py(d));
          sys.degrees.push_back(std::move(r));
        }
        return types_to_py(
            find_splitting_types(fan, augmented_matrix(fan).q, sys, strictness_from(strict)));
      },
      py::arg("fan"), py::arg("xi"), py::arg("strict") = false);

  m.def(
      "tangent_split",
      [](const Fan& fan, bool strict) { return split_result(fan, splitting_system(tangent_bundle(fan)), strict); },
      py::arg("fan"), py::arg("strict") = false);
  m.def(
      "bundle_split",
      [](const Fan& fan, const std::string& text, bool strict) {
        auto data = parse_bundle(text, fan);
        auto problems = validate(data);
        if (!problems.empty()) throw Error("bundle", problems.front());
        return split_result(fan, splitting_system(data), strict);
      },
      py::arg("fan"), py::arg("bundle_text"), py::arg("strict") = false);
  m.def(
      "euler_split",
      [](const Fan& fan, const std::string& text, bool strict) {
        auto spec = parse_euler(text, fan);
        check_euler_spec(spec);
        return split_result(fan, euler_splitting_system(spec, augmented_matrix(fan).q), strict);
      },
      py::arg("fan"), py::arg("euler_text"), py::arg("strict") = false);

  m.def(
      "table41",
      [](std::size_t max_k, bool strict, unsigned threads) {
        if (max_k > kHardBlowupCap) throw Error("usage", "k is capped at " + std::to_string(kHardBlowupCap));
        std::vector<Table41Row> rows;
        {
          py::gil_scoped_release release;
          rows = compute_table41(max_k, strictness_from(strict), threads);
        }
        py::list out;
        for (const auto& r : rows) {
          py::list types;
          for (const auto& t : r.types) types.append(to_py(t));
          out.append(py::make_tuple(r.k, r.graph.weights, types));
        }
        return out;
      },
      py::arg("max_k") = kDefaultBlowupCap, py::arg("strict") = false, py::arg("threads") = 1);
}
