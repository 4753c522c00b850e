#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "hopf/catalog.hpp"
#include "hopf/cobar.hpp"
#include "hopf/errors.hpp"
#include "hopf/io.hpp"
#include "hopf/replication.hpp"
#include "hopf/structure.hpp"

namespace py = pybind11;
using namespace hopf;

// Structured results cross the boundary as JSON text; the Python package
// decodes them into dicts.

namespace {

std::vector<Scalar> to_scalars(const py::list& params)
{
	std::vector<Scalar> out;
	for (const auto& p : params)
		out.push_back(Scalar::parse(py::str(p).cast<std::string>()));
	return out;
}

std::vector<std::string> rendered(const FilteredSubspace& s)
{
	std::vector<std::string> out;
	for (const auto& b : s.basis)
		out.push_back(s.algebra.render(b));
	return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "Exact computations with connected Hopf algebras and coassociative Lie algebras";

	py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
	py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);

	py::class_<CLA>(m, "CLA")
	    .def_static("from_json", [](const std::string& text) { return cla_from_json(Json::parse(text)); })
	    .def("to_json", [](const CLA& L) { return cla_to_json(L).dump(); })
	    .def_property_readonly("dim", &CLA::dim)
	    .def_property_readonly("names", &CLA::names)
	    .def("verify", [](const CLA& L) { return report_to_json(verify_cla(L)).dump(); })
	    .def("is_anti_cocommutative", &is_anti_cocommutative)
	    .def("conilpotency_index", &conilpotency_index)
	    .def("lantern", [](const CLA& L) { return graded_lie_to_json(lantern_of_cla(L)).dump(); })
	    .def("__str__", &cla_to_text)
	    .def(py::self == py::self);

	py::class_<HopfPresentation>(m, "Hopf")
	    .def_static("from_json", [](const std::string& text) { return hopf_from_json(Json::parse(text)); })
	    .def("to_json", [](const HopfPresentation& h) { return hopf_to_json(h).dump(); })
	    .def_property_readonly("generators",
	                           [](const HopfPresentation& h) {
		                           std::vector<std::string> out;
		                           for (const auto& g : h.algebra().generators())
			                           out.push_back(g.name);
		                           return out;
	                           })
	    .def("verify", [](const HopfPresentation& h, int d) { return report_to_json(h.verify_all(d)).dump(); },
	         py::arg("antipode_degree") = 4)
	    .def("normal_form", [](const HopfPresentation& h, const std::string& e) {
		    return h.algebra().render(h.algebra().parse(e));
	    })
	    .def("coproduct",
	         [](const HopfPresentation& h, const std::string& e) { return h.render(h.coproduct(h.algebra().parse(e))); })
	    .def("antipode",
	         [](const HopfPresentation& h, const std::string& e) { return h.algebra().render(h.antipode(h.algebra().parse(e))); })
	    .def("pbw_count", [](const HopfPresentation& h, int n) { return h.algebra().pbw_count(n); })
	    .def("primitive_space", [](const HopfPresentation& h, int d) { return rendered(primitive_space(h, d)); })
	    .def("p2_space", [](const HopfPresentation& h, int d) { return rendered(p2_space(h, d)); })
	    .def("coradical", [](const HopfPresentation& h, int n, int d) { return rendered(coradical_filtration(h, n, d)); })
	    .def("extract_cla", &extract_cla)
	    .def("lantern", [](const HopfPresentation& h, int d) { return graded_lie_to_json(lantern_of_hopf(h, d)).dump(); })
	    .def(
	        "h2_report",
	        [](const HopfPresentation& h, int bound, bool by_bidegree) {
		        return cobar_report_to_json(h2_report(h, bound, by_bidegree)).dump();
	        },
	        py::arg("bound"), py::arg("by_bidegree") = false);

	m.def("enveloping", &enveloping);
	m.def(
	    "build_family",
	    [](const std::string& tag, const py::list& params) -> py::object {
		    CatalogObject obj = build_family({tag, to_scalars(params)});
		    if (obj.cla)
			    return py::cast(*obj.cla);
		    return py::cast(*obj.hopf);
	    },
	    py::arg("tag"), py::arg("params") = py::list());
	m.def("catalog", [] {
		std::vector<std::string> out;
		for (const auto& s : list_catalog())
			out.push_back(s.label());
		return out;
	});
	m.def(
	    "replicate",
	    [](const std::vector<int>& only) {
		    ReplicationOptions opts;
		    opts.only = only;
		    py::gil_scoped_release release;
		    return replication_to_json(replicate(opts)).dump();
	    },
	    py::arg("only") = std::vector<int>{});
}
