// Python module `layerwave._layerwave`.

#include "layerwave/commands.hpp"
#include "layerwave/oracle.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace layerwave;

namespace {

py::array_t<double> to_array(const std::vector<double>& v)
{
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::array_t<cplx> psi_on(const ScatteringSolution& sol, py::array_t<double, py::array::c_style | py::array::forcecast> x)
{
    py::array_t<cplx> out(x.request().shape);
    const double* in = x.data();
    cplx* dst = out.mutable_data();
    for (py::ssize_t i = 0; i < x.size(); ++i) {
        dst[i] = evaluate_psi(sol, in[i]);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_layerwave, m)
{
    m.doc() = "Exact scattering states of layered rectangular barriers";

    auto base = py::register_exception<Error>(m, "LayerwaveError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<DegenerateError>(m, "DegenerateError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Barrier>(m, "Barrier")
        .def(py::init([](double height, double width, double center) { return Barrier{height, width, center}; }),
             py::arg("height"), py::arg("width"), py::arg("center"))
        .def_readwrite("height", &Barrier::height)
        .def_readwrite("width", &Barrier::width)
        .def_readwrite("center", &Barrier::center)
        .def_property_readonly("left_edge", &Barrier::left_edge)
        .def_property_readonly("right_edge", &Barrier::right_edge)
        .def("__repr__", [](const Barrier& b) {
            std::ostringstream s;
            s << "Barrier(height=" << b.height << ", width=" << b.width << ", center=" << b.center << ")";
            return s.str();
        });

    py::class_<LayeredStructure>(m, "Structure")
        .def(py::init([](double v_left, double v_right, double span, std::vector<Barrier> barriers) {
                 return LayeredStructure{v_left, v_right, span, std::move(barriers)};
             }),
             py::arg("v_left"), py::arg("v_right"), py::arg("span"), py::arg("barriers") = std::vector<Barrier>{})
        .def_readwrite("v_left", &LayeredStructure::v_left)
        .def_readwrite("v_right", &LayeredStructure::v_right)
        .def_readwrite("span", &LayeredStructure::span)
        .def_readwrite("barriers", &LayeredStructure::barriers)
        .def("__len__", &LayeredStructure::size)
        .def("__eq__", [](const LayeredStructure& a, const LayeredStructure& b) { return a == b; });

    m.def(
        "validate",
        [](const LayeredStructure& s) {
            std::vector<std::string> out;
            for (const auto& v : validate_structure(s).violations) {
                out.push_back(v.message);
            }
            return out;
        },
        py::arg("structure"), "List of violations; empty when the structure is valid.");
    m.def("mirrored", &mirrored, py::arg("structure"));
    m.def("wavenumber", &wavenumber, py::arg("energy"), py::arg("potential"));

    py::class_<ScatteringSolution>(m, "Solution")
        .def_property_readonly("R", [](const ScatteringSolution& s) { return s.embedded.R_full; })
        .def_property_readonly("T", [](const ScatteringSolution& s) { return s.embedded.T_full; })
        .def_property_readonly("transmission",
                               [](const ScatteringSolution& s) { return transmission_probability(s.embedded, s.k); })
        .def_property_readonly("reflection",
                               [](const ScatteringSolution& s) { return reflection_probability(s.embedded, s.k); })
        .def_readonly("a", &ScatteringSolution::a)
        .def_readonly("b", &ScatteringSolution::b)
        .def_readonly("c", &ScatteringSolution::c)
        .def_readonly("d", &ScatteringSolution::d)
        .def_property_readonly("interfaces", [](const ScatteringSolution& s) { return to_array(s.interfaces); })
        .def("psi", &psi_on, py::arg("x"), "psi at each x (array or scalar-like input).");

    m.def("solve", &solve_scattering, py::arg("structure"), py::arg("energy"));

    m.def(
        "sweep",
        [](const LayeredStructure& s, double lo, double hi, std::size_t steps, unsigned threads) {
            const SweepResult r = run_sweep(s, {lo, hi, steps}, threads);
            std::vector<double> e, t, rr;
            for (const auto& row : r.rows) {
                e.push_back(row.energy);
                t.push_back(row.transmission);
                rr.push_back(row.reflection);
            }
            py::dict out;
            out["energy"] = to_array(e);
            out["transmission"] = to_array(t);
            out["reflection"] = to_array(rr);
            out["notes"] = r.notes;
            return out;
        },
        py::arg("structure"), py::arg("lo"), py::arg("hi"), py::arg("steps"), py::arg("threads") = 0u);

    py::class_<PeriodicLattice>(m, "Lattice")
        .def(py::init([](double height, double width, double period, std::size_t count, double first_center) {
                 return PeriodicLattice{height, width, period, count, first_center};
             }),
             py::arg("height"), py::arg("width"), py::arg("period"), py::arg("count"), py::arg("first_center"))
        .def_readwrite("height", &PeriodicLattice::barrier_height)
        .def_readwrite("width", &PeriodicLattice::barrier_width)
        .def_readwrite("period", &PeriodicLattice::period)
        .def_readwrite("count", &PeriodicLattice::count)
        .def_readwrite("first_center", &PeriodicLattice::first_center)
        .def("to_structure", &PeriodicLattice::to_structure, py::arg("v_left") = 0.0, py::arg("v_right") = 0.0);

    m.def(
        "cos_beta", [](const PeriodicLattice& lat, double e) { return bloch_phase(lat, e).cos_beta; }, py::arg("lattice"),
        py::arg("energy"));
    m.def(
        "bloch_phase", [](const PeriodicLattice& lat, double e) { return bloch_phase(lat, e).beta; },
        py::arg("lattice"), py::arg("energy"));

    m.def(
        "band_scan",
        [](const PeriodicLattice& lat, double lo, double hi, double resolution) {
            const BandTable t = band_scan(lat, lo, hi, resolution);
            std::vector<std::tuple<double, double, std::string>> intervals;
            for (const auto& iv : t.intervals) {
                intervals.emplace_back(iv.lo, iv.hi, to_string(iv.kind));
            }
            py::dict out;
            out["edges"] = to_array(t.edges);
            out["intervals"] = intervals;
            out["notes"] = t.notes;
            return out;
        },
        py::arg("lattice"), py::arg("lo"), py::arg("hi"), py::arg("resolution"));

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("name", &Scenario::name)
        .def_readonly("structure", &Scenario::structure)
        .def_readonly("default_energy", &Scenario::default_energy)
        .def_readonly("unit_label", &Scenario::unit_label)
        .def_readonly("lattice", &Scenario::lattice);

    m.def("scenario_names", &scenario_names);
    m.def(
        "scenario", [](const std::string& name, const ScenarioParams& params) { return make_scenario(name, params); },
        py::arg("name"), py::arg("params") = ScenarioParams{});

    m.def(
        "parse_structure", [](const std::string& text) { return parse_structure(text).structure; }, py::arg("text"));
    m.def(
        "serialize_structure",
        [](const LayeredStructure& s, const std::string& unit) { return serialize_structure(s, unit); },
        py::arg("structure"), py::arg("unit_label") = "s");

    m.def(
        "oracle_check",
        [](const LayeredStructure& s, double energy) {
            const OracleCheck c = run_oracle_check(s, energy);
            py::dict out;
            out["max_relative"] = c.discrepancy.max_relative;
            out["worst"] = c.discrepancy.worst;
            out["tolerance"] = c.tolerance;
            out["condition_estimate"] = c.condition_estimate;
            out["passed"] = c.passed();
            return out;
        },
        py::arg("structure"), py::arg("energy"));
}
