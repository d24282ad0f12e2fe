#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cy2/counting.hpp"
#include "cy2/hearts.hpp"
#include "cy2/render.hpp"
#include "cy2/serialize.hpp"
#include "cy2/torsion.hpp"
#include "cy2/verify.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const cy2::BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object from_json(const cy2::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

// Sets come in as any JSON-compatible Python value: labels, ids or [i, j] pairs.
cy2::IndecSet to_set(const cy2::CategoryTables& tables, const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return cy2::parse_set(tables, obj.cast<std::string>());
  const std::string text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return cy2::parse_set(tables, text);
}

std::vector<std::string> labels(const cy2::CategoryTables& tables, const cy2::IndecSet& x) {
  std::vector<std::string> out;
  for (int id : x.ids()) out.push_back(cy2::label(tables.indec(id)));
  return out;
}

cy2::CategorySpec make_spec(const std::string& family, int n, int t) {
  cy2::CategorySpec s{cy2::parse_family(family), n, t};
  s.validate();
  return s;
}

}  // namespace

PYBIND11_MODULE(_cy2, m) {
  m.doc() = "Torsion pairs in the 2-Calabi-Yau categories A_{n,t} and D_{n,t}";

  py::class_<cy2::CategoryTables>(m, "Category")
      .def(py::init([](const std::string& family, int n, int t) {
             return cy2::build(make_spec(family, n, t));
           }),
           py::arg("family"), py::arg("n"), py::arg("t"))
      .def_property_readonly("name", [](const cy2::CategoryTables& c) { return c.spec().name(); })
      .def("__len__", &cy2::CategoryTables::size)
      .def("labels",
           [](const cy2::CategoryTables& c) { return labels(c, c.full_set()); })
      .def("rigid", [](const cy2::CategoryTables& c) { return labels(c, c.rigid_set()); })
      .def(
          "right_perp",
          [](const cy2::CategoryTables& c, const py::object& x, long shift) {
            return labels(c, c.shift(c.right_perp(to_set(c, x)), shift));
          },
          py::arg("x"), py::arg("shift") = 0)
      .def(
          "left_perp",
          [](const cy2::CategoryTables& c, const py::object& x, long shift) {
            return labels(c, c.shift(c.left_perp(to_set(c, x)), shift));
          },
          py::arg("x"), py::arg("shift") = 0)
      .def("shift", [](const cy2::CategoryTables& c, const py::object& x,
                       long k) { return labels(c, c.shift(to_set(c, x), k)); })
      .def("is_torsion_half", [](const cy2::CategoryTables& c, const py::object& x) {
        return cy2::is_torsion_half(c, to_set(c, x));
      })
      .def(
          "torsion_halves",
          [](const cy2::CategoryTables& c, unsigned workers) {
            std::vector<std::vector<std::string>> out;
            for (const auto& x : cy2::enumerate_halves(c, {workers, false})) {
              out.push_back(labels(c, x));
            }
            return out;
          },
          py::arg("workers") = 1)
      .def(
          "records",
          [](const cy2::CategoryTables& c, bool hearts) {
            return from_json(cy2::records_to_json(cy2::enumerate_torsion_pairs(c), c, hearts));
          },
          py::arg("hearts") = false)
      .def("heart",
           [](const cy2::CategoryTables& c, const py::object& x) {
             const cy2::IndecSet half = to_set(c, x);
             if (!cy2::is_torsion_half(c, half)) {
               throw py::value_error("not a torsion half of " + c.spec().name());
             }
             const auto r = cy2::make_record(c, half);
             py::object j = from_json(cy2::to_json(cy2::heart_report(r, c)));
             j["core"] = labels(c, r.core);
             return j;
           })
      .def("wings",
           [](const cy2::CategoryTables& c, const py::object& x) {
             std::vector<std::pair<std::string, std::vector<std::string>>> out;
             for (const auto& w : cy2::wing_decomposition(c, to_set(c, x))) {
               out.emplace_back(cy2::label(c.indec(w.apex)), labels(c, w.members));
             }
             return out;
           })
      .def("svg", [](const cy2::CategoryTables& c, const py::object& x) {
        const cy2::IndecSet s = to_set(c, x);
        return c.spec().family == cy2::Family::A ? cy2::render_svg(c.lift_a(s))
                                                 : cy2::render_svg(c.lift_d(s));
      });

  m.def("T", [](int mm) { return to_py(cy2::T(mm)); });
  m.def("s", [](int mm) { return to_py(cy2::s(mm)); });
  m.def("t_n1", [](int n) { return to_py(cy2::t_n1(n)); });
  m.def("count_ptolemy", [](int mm) { return to_py(cy2::count_ptolemy(mm)); });
  m.def(
      "count",
      [](const std::string& family, int n, int t) {
        return to_py(cy2::count_torsion_pairs_formula(make_spec(family, n, t)));
      },
      py::arg("family"), py::arg("n"), py::arg("t"));
  m.def(
      "verify",
      [](unsigned workers) {
        cy2::VerifyOptions opts;
        opts.workers = workers;
        std::vector<std::tuple<int, std::string, bool>> out;
        for (const auto& r : cy2::run_acceptance(opts)) out.emplace_back(r.id, r.title, r.pass());
        return out;
      },
      py::arg("workers") = 1);
}
