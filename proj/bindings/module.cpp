#include "gradedgeom/bundle.hpp"
#include "gradedgeom/chart.hpp"
#include "gradedgeom/clifford.hpp"
#include "gradedgeom/diffop.hpp"
#include "gradedgeom/dsl.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gg;

namespace {

py::object degree_to_py(const FiltDegree &d) {
    if (d.is_finite()) return py::int_(d.value());
    return py::cast(std::numeric_limits<double>::infinity());
}

Section make_section(const std::vector<Poly> &comps) { return Section{comps}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact calculus of weighted charts, graded bundles, and rescaled operators";

    py::class_<Poly>(m, "Poly")
        .def(py::init([](long c) { return Poly(c); }))
        .def(py::init([](const std::string &c) { return Poly(rat_parse(c)); }))
        .def_static("var", &Poly::var, py::arg("name"), py::arg("exp") = 1)
        .def("__add__", [](const Poly &a, const Poly &b) { return a + b; })
        .def("__sub__", [](const Poly &a, const Poly &b) { return a - b; })
        .def("__mul__", [](const Poly &a, const Poly &b) { return a * b; })
        .def("__neg__", [](const Poly &a) { return -a; })
        .def("__pow__", &Poly::pow)
        .def("__eq__", [](const Poly &a, const Poly &b) { return a == b; })
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly &p) { return "Poly(" + p.str() + ")"; })
        .def("derivative", py::overload_cast<const std::string &, int>(&Poly::derivative, py::const_),
             py::arg("name"), py::arg("times") = 1)
        .def("total_degree", &Poly::total_degree)
        .def("is_zero", &Poly::is_zero);

    py::class_<WeightedChart>(m, "WeightedChart")
        .def(py::init<std::vector<std::string>, std::vector<int>>(), py::arg("coords"),
             py::arg("weights"))
        .def_property_readonly("coords", &WeightedChart::coords)
        .def_property_readonly("weights", &WeightedChart::weights);

    m.def("filtration_degree",
          [](const WeightedChart &c, const Poly &f) { return degree_to_py(filtration_degree(c, f)); });
    m.def("homogeneous_part", &homogeneous_part);
    m.def("zoom_rescale",
          [](const WeightedChart &c, const Poly &f, long i) { return zoom_rescale(c, f, i).str(); });
    m.def("is_weighted_morphism", &is_weighted_morphism);

    py::class_<WeightedBundle>(m, "WeightedBundle")
        .def(py::init<WeightedChart, std::vector<std::string>, std::vector<int>,
                      std::vector<std::string>>(),
             py::arg("base"), py::arg("frame_names"), py::arg("vweights"),
             py::arg("fiber_names") = std::vector<std::string>{})
        .def_property_readonly("frame_names", &WeightedBundle::frame_names)
        .def_property_readonly("vweights", &WeightedBundle::vweights);

    m.def("section_degree", [](const WeightedBundle &b, const std::vector<Poly> &comps) {
        return degree_to_py(section_degree(b, make_section(comps)));
    });
    m.def("homogeneous_approx", [](const WeightedBundle &b, const std::vector<Poly> &comps, long i) {
        GrSection g = homogeneous_approx(b, make_section(comps), i);
        return g.components;
    });
    m.def("interpolate_section", [](const WeightedBundle &b, const std::vector<Poly> &comps, long i) {
        std::vector<std::string> out;
        for (const auto &l : interpolate_section(b, make_section(comps), i)) out.push_back(l.str());
        return out;
    });
    m.def("zoom_equivariance_check",
          [](const WeightedBundle &b, const std::vector<Poly> &comps, long i, const std::string &lam,
             long shift) { return zoom_equivariance_check(b, make_section(comps), i, rat_parse(lam), shift); },
          py::arg("bundle"), py::arg("components"), py::arg("i"), py::arg("lam"),
          py::arg("exponent_shift") = 0);

    py::class_<CliffordElt>(m, "CliffordElt")
        .def_static("generator", &CliffordElt::generator)
        .def_static("scalar", [](int dim, const std::string &c) { return CliffordElt(dim, rat_parse(c)); })
        .def("__add__", [](const CliffordElt &a, const CliffordElt &b) { return a + b; })
        .def("__sub__", [](const CliffordElt &a, const CliffordElt &b) { return a - b; })
        .def("__mul__", [](const CliffordElt &a, const CliffordElt &b) { return a * b; })
        .def("__eq__", [](const CliffordElt &a, const CliffordElt &b) { return a == b; })
        .def("__str__", &CliffordElt::str)
        .def("__repr__", [](const CliffordElt &a) { return "CliffordElt(" + a.str() + ")"; })
        .def("reverse", &CliffordElt::reverse);

    m.def("cl_degree", [](const CliffordElt &a) { return degree_to_py(cl_degree(a)); });

    m.def(
        "run_script",
        [](const std::string &source, bool json, int trunc) {
            gg::dsl::ParseResult parsed = gg::dsl::parse(source);
            std::ostringstream out, err;
            int rc = 2;
            if (parsed.ok()) {
                gg::dsl::RunOptions options;
                options.json = json;
                options.trunc = trunc;
                rc = gg::dsl::run_script(parsed.script, options, out, err);
            } else {
                for (const auto &d : parsed.diagnostics) err << d.str() << "\n";
            }
            return py::make_tuple(rc, out.str(), err.str());
        },
        py::arg("source"), py::arg("json") = false, py::arg("trunc") = 8,
        "Evaluate a script; returns (exit_code, stdout, stderr).");
}
