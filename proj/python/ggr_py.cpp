#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ggr/dsl.hpp"
#include "ggr/errors.hpp"
#include "ggr/radical.hpp"
#include "ggr/suite.hpp"

namespace py = pybind11;
using namespace ggr;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

struct Structure {
  dsl::StructureSpec spec;
  dsl::Elaborated e;

  explicit Structure(dsl::StructureSpec s) : spec(std::move(s)), e(dsl::elaborate(spec)) {}

  const anneid::GammaAnneid& anneid() const {
    if (e.anneid) return *e.anneid;
    if (e.moduloid) return e.moduloid->over();
    throw PreconditionError(dsl::kind_name(e.kind) + " does not define an anneid");
  }

  py::object radical(std::optional<std::size_t> max_size) const {
    radical::RadicalOptions opts;
    if (max_size) opts.bounds.max_carrier = *max_size;
    const auto& a = anneid();
    auto j = radical::jacobson_radical(a, opts).to_json(a);
    return to_py(j);
  }

  std::vector<std::vector<std::string>> ideals(const std::string& side, std::optional<std::size_t> max_size) const {
    ideals::Side s = side == "right" ? ideals::Side::Right
                     : side == "left" ? ideals::Side::Left
                     : side == "two_sided" ? ideals::Side::TwoSided
                                           : throw PreconditionError("side must be right, left or two_sided");
    ideals::EnumerationBounds bounds;
    if (max_size) bounds.max_carrier = *max_size;
    const auto& a = anneid();
    std::vector<std::vector<std::string>> out;
    for (const auto& i : ideals::enumerate_ideals(a, s, bounds)) {
      auto& names = out.emplace_back();
      i.for_each([&](ElemId x) { names.push_back(a.A().name(x)); });
    }
    return out;
  }
};

}  // namespace

PYBIND11_MODULE(ggr_py, m) {
  m.doc() = "Finite graded gamma rings and gamma anneids";

  py::register_exception<dsl::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Structure>(m, "Structure")
      .def_property_readonly("kind", [](const Structure& s) { return dsl::kind_name(s.e.kind); })
      .def_property_readonly("name", [](const Structure& s) { return s.e.name; })
      .def_property_readonly("passed", [](const Structure& s) { return s.e.report.passed(); })
      .def_property_readonly("size", [](const Structure& s) { return s.anneid().size(); })
      .def("report", [](const Structure& s) { return to_py(s.e.report.to_json()); })
      .def("report_text", [](const Structure& s) { return s.e.report.to_text(); })
      .def("serialize", [](const Structure& s) { return dsl::serialize(s.spec); })
      .def("radical", &Structure::radical, py::arg("max_size") = py::none())
      .def("ideals", &Structure::ideals, py::arg("side") = "right", py::arg("max_size") = py::none());

  m.def("loads", [](const std::string& text) { return Structure(dsl::parse(text)); }, py::arg("text"),
        "Parse and verify .ggr text.");
  m.def("load", [](const std::string& path) { return Structure(dsl::parse_file(path)); }, py::arg("path"),
        "Parse and verify a .ggr file.");
  m.def(
      "enumerate",
      [](std::uint64_t seed, std::size_t max_size) {
        corpus::CorpusOptions co;
        co.seed = seed;
        co.max_a = max_size;
        return to_py(suite::run_suite(co).to_json());
      },
      py::arg("seed") = 1, py::arg("max_size") = 8, "Run the invariant suite over a generated corpus.");
}
