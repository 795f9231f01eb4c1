#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conway/canonical.hpp"
#include "conway/descending.hpp"
#include "conway/engine.hpp"
#include "conway/fixtures.hpp"
#include "conway/geometry.hpp"
#include "conway/io.hpp"
#include "conway/moves.hpp"
#include "conway/verify.hpp"

namespace py = pybind11;

namespace {

conway::Diagram parse(const std::string& text) {
  return conway::parse_diagram(text).diagram;
}

std::map<int, long long> series_dict(const conway::ConwaySeries& s) {
  return {s.coefficients.begin(), s.coefficients.end()};
}

}  // namespace

PYBIND11_MODULE(conwaypoly, m) {
  m.doc() = "Conway polynomial of oriented link diagrams";

  py::class_<conway::Diagram>(m, "Diagram")
      .def_static("parse", &parse, py::arg("text"))
      .def("serialize",
           [](const conway::Diagram& d, const std::string& name) {
             return conway::serialize_diagram({name, d});
           },
           py::arg("name") = "diagram")
      .def_property_readonly("crossings",
                             [](const conway::Diagram& d) {
                               std::vector<int> ids;
                               for (const auto& c : d.crossings) ids.push_back(c.id);
                               return ids;
                             })
      .def_property_readonly("free_loops", [](const conway::Diagram& d) { return d.free_loops; })
      .def("component_count", &conway::component_count)
      .def("sign", [](const conway::Diagram& d, int c) { return conway::sign(d, c); },
           py::arg("crossing"))
      .def("change", [](const conway::Diagram& d, int c) { return conway::change_crossing(d, c); },
           py::arg("crossing"))
      .def("smooth", [](const conway::Diagram& d, int c) { return conway::smooth_crossing(d, c); },
           py::arg("crossing"))
      .def("mirror", [](const conway::Diagram& d) { return conway::mirror(d); })
      .def("canonical_key",
           [](const conway::Diagram& d) { return py::bytes(conway::canonical_key(d)); })
      .def("conway",
           [](const conway::Diagram& d, std::optional<int> max_degree) {
             return series_dict(conway::conway_polynomial(d, max_degree));
           },
           py::arg("max_degree") = py::none())
      .def("__eq__", [](const conway::Diagram& a, const conway::Diagram& b) { return a == b; });

  m.def("conway",
        [](const std::string& text, std::optional<int> max_degree) {
          return series_dict(conway::conway_polynomial(parse(text), max_degree));
        },
        py::arg("text"), py::arg("max_degree") = py::none(),
        "Conway coefficients of a diagram document, nonzero entries only");

  m.def("check_skein",
        [](const std::string& text, int crossing, int degree) {
          return conway::check_skein(parse(text), crossing, degree);
        },
        py::arg("text"), py::arg("crossing"), py::arg("degree"));

  m.def("brute_force_coefficient",
        [](const std::string& text, int degree) {
          return conway::brute_force_coefficient(parse(text), degree);
        },
        py::arg("text"), py::arg("degree"));

  m.def("random_equivalent",
        [](const std::string& text, int steps, std::uint64_t seed) {
          auto walk = conway::random_equivalent(parse(text), steps, seed);
          return py::make_tuple(conway::serialize_diagram({"walked", walk.diagram}), walk.log);
        },
        py::arg("text"), py::arg("steps"), py::arg("seed"));

  m.def("ingest",
        [](const std::string& contours, const std::string& name) {
          auto shadow = conway::compute_shadow(conway::parse_contours(contours));
          auto d = conway::descending_diagram(shadow.diagram,
                                              conway::default_marking(shadow.diagram));
          return conway::serialize_diagram({name, d});
        },
        py::arg("contours"), py::arg("name") = "ingested",
        "contour document -> descending diagram document");

  m.def("fixtures", [] {
    std::map<std::string, std::string> out;
    for (const auto& f : conway::fixtures())
      out[std::string(f.name)] = std::string(f.document);
    return out;
  });
}
