#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "dirac1d/jobs.hpp"
#include "dirac1d/verify.hpp"
#include "dirac1d/version.hpp"

namespace py = pybind11;
using namespace dirac1d;

namespace {

std::vector<std::vector<cplx>> as_rows(const Mat2C& m)
{
    return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
}

ImpurityArray array_from_tuples(const std::vector<std::tuple<double, double, double>>& sites)
{
    std::vector<Impurity> v;
    v.reserve(sites.size());
    for (const auto& [x, q, l] : sites) v.push_back({x, {q, l}});
    return ImpurityArray(std::move(v));
}

}  // namespace

PYBIND11_MODULE(dirac1d, mod)
{
    mod.doc() = "Spectra of the 1D Dirac equation with point impurities: bound states, "
                "scattering amplitudes, phase shifts, charge densities.";
    mod.attr("__version__") = kVersion;

    py::enum_<Species>(mod, "Species")
        .value("Electron", Species::Electron)
        .value("Positron", Species::Positron);

    py::enum_<PointKind>(mod, "PointKind")
        .value("Electrostatic", PointKind::Electrostatic)
        .value("MassSpike", PointKind::MassSpike);

    py::enum_<SweepKind>(mod, "SweepKind")
        .value("NoSweep", SweepKind::None)
        .value("Electrostatic", SweepKind::Electrostatic)
        .value("MassSpike", SweepKind::MassSpike);

    py::class_<PointInteraction>(mod, "PointInteraction")
        .def(py::init<double, double>(), py::arg("q") = 0.0, py::arg("lam") = 0.0)
        .def_readwrite("q", &PointInteraction::q)
        .def_readwrite("lam", &PointInteraction::lambda)
        .def("__repr__", [](const PointInteraction& p) {
            return "PointInteraction(q=" + std::to_string(p.q) +
                   ", lam=" + std::to_string(p.lambda) + ")";
        });

    mod.def(
        "matching_matrix",
        [](const PointInteraction& p, Species s) { return as_rows(matching_matrix(p, s)); },
        py::arg("coupling"), py::arg("species"),
        "2x2 jump matrix psi(0+) = T psi(0-) of one impurity");

    mod.def(
        "dispersion", [](double m, cplx k) { return dispersion(m, k); }, py::arg("m"),
        py::arg("k"), "omega(k) on the positive branch, also for imaginary k");

    py::class_<ScatteringResult>(mod, "ScatteringResult")
        .def_readonly("sigma", &ScatteringResult::sigma)
        .def_readonly("rho", &ScatteringResult::rho)
        .def("unitarity_residual", &ScatteringResult::unitarity_residual);

    py::class_<SpinorField>(mod, "SpinorField")
        .def("eval",
             [](const SpinorField& f, double x) {
                 const Spinor s = f.eval(x);
                 return std::make_pair(s.up, s.dn);
             })
        .def("density", [](const SpinorField& f, double x) { return f.eval(x).norm2(); })
        .def("total_probability", &SpinorField::total_probability);

    py::class_<BoundState>(mod, "BoundState")
        .def_readonly("species", &BoundState::species)
        .def_readonly("kappa_b", &BoundState::kappa_b)
        .def_readonly("omega_b", &BoundState::omega_b)
        .def_readonly("sign_flip", &BoundState::sign_flip)
        .def_readonly("profile", &BoundState::profile);

    py::class_<DensityProfile>(mod, "DensityProfile")
        .def_readonly("Q", &DensityProfile::Q)
        .def_readonly("sign", &DensityProfile::sign)
        .def_readonly("amplitude", &DensityProfile::amplitude)
        .def_readonly("decay_rate", &DensityProfile::decay_rate)
        .def("__call__", &DensityProfile::operator());

    py::class_<PhaseShifts>(mod, "PhaseShifts")
        .def_readonly("delta_plus", &PhaseShifts::delta_plus)
        .def_readonly("delta_minus", &PhaseShifts::delta_minus)
        .def_readonly("delta", &PhaseShifts::delta)
        .def_readonly("tan_two_delta", &PhaseShifts::tan_two_delta);

    mod.def("electrostatic_bound_state", &electrostatic_bound_state, py::arg("m"),
            py::arg("q"));
    mod.def("mass_spike_bound_state", &mass_spike_bound_state, py::arg("m"), py::arg("lam"));
    mod.def("electrostatic_amplitudes", &electrostatic_amplitudes, py::arg("m"), py::arg("q"),
            py::arg("k"), py::arg("species"));
    mod.def("mass_spike_amplitudes", &mass_spike_amplitudes, py::arg("m"), py::arg("lam"),
            py::arg("k"), py::arg("species"));
    mod.def("total_phase_shift", &total_phase_shift, py::arg("amplitudes"));
    mod.def("closed_form_tan_two_delta", &closed_form_tan_two_delta, py::arg("m"),
            py::arg("coupling"), py::arg("kind"), py::arg("species"), py::arg("k"));
    mod.def("pole_condition_residual", &pole_condition_residual, py::arg("m"),
            py::arg("coupling"), py::arg("kind"), py::arg("species"), py::arg("kappa"));
    mod.def("bound_state_density", &bound_state_density, py::arg("state"), py::arg("Q"));

    py::class_<ImpurityArray>(mod, "ImpurityArray")
        .def(py::init(&array_from_tuples), py::arg("sites"),
             "sites: list of (position, q, lam) tuples")
        .def("__len__", &ImpurityArray::size)
        .def("positions", [](const ImpurityArray& a) {
            std::vector<double> xs;
            for (const auto& s : a.sites) xs.push_back(s.position);
            return xs;
        });

    py::class_<TwoSided>(mod, "TwoSided")
        .def_readonly("sigma_r", &TwoSided::sigma_r)
        .def_readonly("rho_r", &TwoSided::rho_r)
        .def_readonly("sigma_l", &TwoSided::sigma_l)
        .def_readonly("rho_l", &TwoSided::rho_l)
        .def("right", &TwoSided::right)
        .def("left", &TwoSided::left);

    mod.def("s_matrix", &s_matrix, py::arg("array"), py::arg("species"), py::arg("m"),
            py::arg("k"), "Two-sided transmission/reflection amplitudes at real k > 0");
    mod.def("secular_function", &secular_function, py::arg("array"), py::arg("species"),
            py::arg("m"), py::arg("kappa"));
    mod.def("find_bound_states", &find_bound_states, py::arg("array"), py::arg("species"),
            py::arg("m"), py::arg("n_grid") = 2048, py::arg("margin") = 1e-6);
    mod.def(
        "matching_residual",
        [](const BoundState& bs, const ImpurityArray& arr) {
            return matching_residual(bs, arr);
        },
        py::arg("state"), py::arg("array"));

    py::class_<GridSpec>(mod, "GridSpec")
        .def(py::init<>())
        .def(py::init([](double lo, double hi, int n) {
                 return GridSpec{lo, hi, n};
             }),
             py::arg("lo"), py::arg("hi"), py::arg("n"))
        .def_readwrite("lo", &GridSpec::lo)
        .def_readwrite("hi", &GridSpec::hi)
        .def_readwrite("n", &GridSpec::n);

    py::class_<JobConfig>(mod, "JobConfig")
        .def(py::init<>())
        .def_readwrite("mass", &JobConfig::mass)
        .def_readwrite("Q", &JobConfig::Q)
        .def_readwrite("species", &JobConfig::species)
        .def_readwrite("k_grid", &JobConfig::k_grid)
        .def_readwrite("x_grid", &JobConfig::x_grid)
        .def_readwrite("sweep", &JobConfig::sweep)
        .def_readwrite("sweep_grid", &JobConfig::sweep_grid)
        .def_readwrite("state_index", &JobConfig::state_index)
        .def("add_impurity",
             [](JobConfig& cfg, double x, double q, double l) {
                 cfg.impurities.push_back({x, {q, l}});
             },
             py::arg("position"), py::arg("q"), py::arg("lam"));

    py::class_<Table>(mod, "Table")
        .def_readonly("config", &Table::config)
        .def_readonly("columns", &Table::columns)
        .def_readonly("rows", &Table::rows)
        .def_readonly("checks", &Table::checks);

    mod.def("run_scatter", &run_scatter, py::arg("config"));
    mod.def("run_bound", &run_bound, py::arg("config"));
    mod.def("run_density", &run_density, py::arg("config"));
    mod.def("run_phase", &run_phase, py::arg("config"));
    mod.def("render", &render, py::arg("table"), py::arg("format"),
            "Serialize a table as 'csv' or 'json'");

    py::class_<CheckResult>(mod, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::pass)
        .def_readonly("detail", &CheckResult::detail);

    mod.def("run_verification", &run_verification,
            "Run the full deterministic invariant suite");
}
