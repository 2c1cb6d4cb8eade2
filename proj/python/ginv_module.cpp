#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "ginv/automorphisms.hpp"
#include "ginv/catalog.hpp"
#include "ginv/char_table.hpp"
#include "ginv/double_classes.hpp"
#include "ginv/report.hpp"
#include "ginv/sym_alt.hpp"
#include "ginv/table_cache.hpp"

namespace py = pybind11;

namespace {

// Structured results cross the boundary as JSON text; the Python wrapper
// decodes them into plain dicts.
ginv::ReportOptions options(std::size_t max_order, std::uint64_t budget, std::size_t centre_max_order) {
  ginv::ReportOptions o;
  o.group.max_order = max_order;
  o.char_table.max_order = max_order;
  o.search.node_budget = budget;
  o.centre.max_order = centre_max_order;
  return o;
}

struct PyGroup {
  ginv::Group group;
  ginv::ClassData classes;

  explicit PyGroup(const std::string& spec)
      : group(ginv::build(ginv::parse_group_spec(spec))), classes(ginv::conjugacy_classes(group)) {}
};

}  // namespace

PYBIND11_MODULE(_ginv, m) {
  m.doc() = "Class-inverting automorphisms and the diagonal modular invariant of Drinfeld centres";

  py::register_exception<ginv::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ginv::SizeLimitError>(m, "SizeLimitError", PyExc_RuntimeError);
  py::register_exception<ginv::SearchBudgetExceeded>(m, "SearchBudgetExceeded", PyExc_RuntimeError);

  py::class_<PyGroup>(m, "Group")
      .def(py::init<const std::string&>(), py::arg("spec"))
      .def_property_readonly("order", [](const PyGroup& g) { return g.group.order(); })
      .def_property_readonly("degree", [](const PyGroup& g) { return g.group.degree(); })
      .def_property_readonly("is_abelian", [](const PyGroup& g) { return g.group.is_abelian(); })
      .def_property_readonly("exponent", [](const PyGroup& g) { return g.group.exponent(); })
      .def("element", [](const PyGroup& g, ginv::ElemId i) {
        if (i >= g.group.order()) throw py::index_error("element index out of range");
        return g.group.element(i).to_cycle_string();
      })
      .def("class_sizes", [](const PyGroup& g) { return g.classes.sizes; })
      .def("double_class_count", [](const PyGroup& g) { return ginv::double_classes(g.group, g.classes).count(); })
      .def("is_ambivalent", [](const PyGroup& g) { return ginv::is_ambivalent(g.group, g.classes); })
      .def("is_doubly_ambivalent",
           [](const PyGroup& g) {
             return ginv::is_doubly_ambivalent(g.group, ginv::double_classes(g.group, g.classes));
           })
      .def("character_degrees",
           [](const PyGroup& g) { return ginv::character_table(g.group, g.classes).degrees; })
      .def("all_characters_real",
           [](const PyGroup& g) { return ginv::all_characters_real(ginv::character_table(g.group, g.classes)); })
      .def("automorphism_count",
           [](const PyGroup& g, std::uint64_t budget) {
             ginv::SearchOptions o;
             o.node_budget = budget;
             std::size_t n = 0;
             ginv::for_each_automorphism(g.group, g.classes, o, [&](const ginv::Automorphism&) {
               ++n;
               return true;
             });
             return n;
           },
           py::arg("node_budget") = 20'000'000)
      .def("__repr__", [](const PyGroup& g) { return "<ginv.Group of order " + std::to_string(g.group.order()) + ">"; });

  m.def("_analyze_json",
        [](const std::string& spec, std::size_t max_order, std::uint64_t budget, std::size_t centre_max_order,
           const std::string& cache_dir) {
          ginv::ReportOptions o = options(max_order, budget, centre_max_order);
          std::unique_ptr<ginv::TableCache> cache;
          if (!cache_dir.empty()) {
            cache = std::make_unique<ginv::TableCache>(cache_dir);
            o.cache = cache.get();
          }
          py::gil_scoped_release release;
          return ginv::to_json(ginv::analyze(spec, o)).dump();
        },
        py::arg("spec"), py::arg("max_order"), py::arg("node_budget"), py::arg("centre_max_order"),
        py::arg("cache_dir"));
  m.def("_centre_json",
        [](const std::string& spec, const std::string& phi, std::size_t centre_max_order) {
          ginv::ReportOptions o;
          o.centre.max_order = centre_max_order;
          return ginv::to_json(ginv::centre_report(spec, phi, o)).dump();
        },
        py::arg("spec"), py::arg("phi"), py::arg("centre_max_order"));
  m.def("_sn_doubles_json",
        [](int n, std::size_t max_order) { return ginv::to_json(ginv::sn_doubles(n, max_order)).dump(); },
        py::arg("n"), py::arg("max_order"));
  m.def("_an_classify_json", [](int lo, int hi) { return ginv::to_json(ginv::an_classify(lo, hi)).dump(); },
        py::arg("lo"), py::arg("hi"));
  m.def("an_classification", [](int n) { return ginv::to_string(ginv::an_classification(n)); }, py::arg("n"),
        "'identity', 'phi' or 'none' for the class-inverting automorphisms of A_n.");
}
