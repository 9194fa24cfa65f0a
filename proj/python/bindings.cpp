#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "robinwall/errors.hpp"
#include "robinwall/infomeasures.hpp"
#include "robinwall/observables.hpp"
#include "robinwall/oracle.hpp"
#include "robinwall/special_functions.hpp"
#include "robinwall/spectrum.hpp"
#include "robinwall/states.hpp"
#include "robinwall/units.hpp"

namespace py = pybind11;
using namespace robinwall;

PYBIND11_MODULE(_robinwall, m) {
  m.doc() = "Bound states and information measures of a quantum wall in a field";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::enum_<Boundary>(m, "Boundary")
      .value("dirichlet", Boundary::dirichlet)
      .value("neumann", Boundary::neumann)
      .value("robin_minus", Boundary::robin_minus)
      .value("robin_plus", Boundary::robin_plus);
  m.def("parse_boundary", [](const std::string& s) { return parse_boundary(s); });

  py::enum_<FieldRegime>(m, "FieldRegime")
      .value("weak", FieldRegime::weak)
      .value("strong", FieldRegime::strong);

  py::class_<BoundState>(m, "BoundState")
      .def_readonly("bc", &BoundState::bc)
      .def_readonly("n", &BoundState::n)
      .def_readonly("field", &BoundState::field)
      .def_readonly("energy", &BoundState::energy)
      .def_readonly("residual", &BoundState::residual)
      .def_readonly("bracket", &BoundState::bracket)
      .def("__repr__", [](const BoundState& s) {
        return "<BoundState " + std::string(to_string(s.bc)) + " n=" +
               std::to_string(s.n) + " field=" + std::to_string(s.field) +
               " E=" + std::to_string(s.energy) + ">";
      });

  m.def("energy", &energy, py::arg("bc"), py::arg("n"), py::arg("field"));
  m.def("energy_asymptotic", &energy_asymptotic, py::arg("bc"), py::arg("n"),
        py::arg("field"), py::arg("regime"));
  m.def("level_spacing", &level_spacing);
  m.def("zero_energy_field", &zero_energy_field);
  m.def("zero_energy_field_numeric", &zero_energy_field_numeric);
  m.def("node_count", &node_count);
  m.def("airy_zero", [](int n, bool derivative) {
    return airy_root(derivative ? AiryZeroKind::ai_prime : AiryZeroKind::ai, n);
  }, py::arg("n"), py::arg("derivative") = false);

  py::class_<ToleranceConfig>(m, "ToleranceConfig")
      .def(py::init<>())
      .def_readwrite("abs_tol", &ToleranceConfig::abs_tol)
      .def_readwrite("rel_tol", &ToleranceConfig::rel_tol)
      .def_readwrite("max_subdivisions", &ToleranceConfig::max_subdivisions)
      .def_readwrite("x_cut_threshold", &ToleranceConfig::x_cut_threshold)
      .def_readwrite("k_tail_switch", &ToleranceConfig::k_tail_switch)
      .def_readwrite("k_tail_switch_dirichlet", &ToleranceConfig::k_tail_switch_dirichlet)
      .def("validate", &ToleranceConfig::validate);

  py::class_<PositionIntegrals>(m, "PositionIntegrals")
      .def_readonly("norm", &PositionIntegrals::norm)
      .def_readonly("entropy", &PositionIntegrals::entropy)
      .def_readonly("fisher", &PositionIntegrals::fisher)
      .def_readonly("onicescu", &PositionIntegrals::onicescu)
      .def_readonly("mean_x", &PositionIntegrals::mean_x)
      .def_readonly("kinetic", &PositionIntegrals::kinetic);
  py::class_<MomentumIntegrals>(m, "MomentumIntegrals")
      .def_readonly("norm", &MomentumIntegrals::norm)
      .def_readonly("entropy", &MomentumIntegrals::entropy)
      .def_readonly("fisher", &MomentumIntegrals::fisher)
      .def_readonly("onicescu", &MomentumIntegrals::onicescu)
      .def_readonly("tail_switch", &MomentumIntegrals::tail_switch);

  py::class_<StateFunctions>(m, "StateFunctions")
      .def_property_readonly("state", &StateFunctions::state)
      .def("psi", py::vectorize([](StateFunctions* s, double x) { return s->psi(x); }))
      .def("dpsi", py::vectorize([](StateFunctions* s, double x) { return s->dpsi(x); }))
      .def("rho", py::vectorize([](StateFunctions* s, double x) { return s->rho(x); }))
      .def("gamma", py::vectorize([](StateFunctions* s, double k) { return s->gamma(k); }))
      .def("phi", &StateFunctions::phi)
      .def("phi_direct", &StateFunctions::phi_direct)
      .def_property_readonly("x_cut", &StateFunctions::x_cut)
      .def_property_readonly("nodes", &StateFunctions::nodes)
      .def_property_readonly("k_series", &StateFunctions::k_series)
      .def_property_readonly("tail_switch", &StateFunctions::tail_switch)
      .def("boundary_residual", &StateFunctions::boundary_residual)
      .def("position_integrals",
           [](const StateFunctions& s) { return s.position_integrals(); })
      .def("momentum_integrals",
           [](const StateFunctions& s) { return s.momentum_integrals(); });

  m.def("build_state", &build_state, py::arg("state"),
        py::arg("cfg") = ToleranceConfig{});
  m.def("momentum_density_peak", &momentum_density_peak);

  py::class_<ExtremumInfo>(m, "ExtremumInfo")
      .def_readonly("m", &ExtremumInfo::m)
      .def_readonly("x", &ExtremumInfo::x)
      .def_readonly("psi_value", &ExtremumInfo::psi_value)
      .def_readonly("seed_x", &ExtremumInfo::seed_x)
      .def_readonly("seed_psi_value", &ExtremumInfo::seed_psi_value);
  m.def("extrema", &extrema);

  py::class_<PolarizationRecord>(m, "PolarizationRecord")
      .def_readonly("state", &PolarizationRecord::state)
      .def_readonly("mean_x", &PolarizationRecord::mean_x)
      .def_readonly("zero_field_mean_x", &PolarizationRecord::zero_field_mean_x)
      .def_readonly("P", &PolarizationRecord::P);
  m.def("polarization", &polarization, py::arg("state"),
        py::arg("cfg") = ToleranceConfig{});
  m.def("hellmann_feynman_mean_x", &hellmann_feynman_mean_x);
  m.def("dipole_matrix", [](Boundary bc, double field, int N) {
    const DipoleMatrix d = dipole_matrix(bc, field, N);
    std::vector<std::vector<double>> rows(N, std::vector<double>(N));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) rows[i][j] = d.at(i, j);
    return rows;
  }, py::arg("bc"), py::arg("field"), py::arg("N"));
  m.def("ground_coupling_asymptote", [](int n, double field) {
    const CouplingAsymptote a = ground_coupling_asymptote(n, field);
    return py::make_tuple(a.value, a.low_accuracy);
  });

  py::class_<InfoRecord>(m, "InfoRecord")
      .def_readonly("S_x", &InfoRecord::S_x)
      .def_readonly("S_k", &InfoRecord::S_k)
      .def_readonly("S_t", &InfoRecord::S_t)
      .def_readonly("I_x", &InfoRecord::I_x)
      .def_readonly("I_k", &InfoRecord::I_k)
      .def_readonly("fisher_product", &InfoRecord::fisher_product)
      .def_readonly("O_x", &InfoRecord::O_x)
      .def_readonly("O_k", &InfoRecord::O_k)
      .def_readonly("onicescu_product", &InfoRecord::onicescu_product)
      .def_readonly("CGL_x", &InfoRecord::CGL_x)
      .def_readonly("CGL_k", &InfoRecord::CGL_k)
      .def_readonly("CGL_product", &InfoRecord::CGL_product);
  m.def("info_record", [](const StateFunctions& s) { return info_record(s); });
  m.def("flat_well_approximation", [](double field) {
    const FlatWell w = flat_well_approximation(field);
    return py::make_tuple(w.S_x, w.S_k, w.S_t);
  });
  m.def("entropy_crossing", [] { return entropy_crossing(); });
  m.def("fisher_product_maximum", [](int n) {
    const FisherMaximum f = fisher_product_maximum(n);
    return py::make_tuple(f.field, f.value);
  });
  m.def("fisher_product_limits", [](int n) {
    const FisherLimits f = fisher_product_limits(n);
    return py::make_tuple(f.zero_field, f.large_field);
  });

  m.def("fd_energies", [](Boundary bc, double field, int levels, int N) {
    return fd_energies(bc, field, levels, default_grid(field, levels, N));
  }, py::arg("bc"), py::arg("field"), py::arg("levels"), py::arg("N") = 4000);
  m.def("fd_moment", [](Boundary bc, double field, int n, int power, int N) {
    return fd_moment(bc, field, n, power, default_grid(field, n + 1, N));
  }, py::arg("bc"), py::arg("field"), py::arg("n"), py::arg("power"),
     py::arg("N") = 4000);

  m.def("field_unit", [](double lambda_abs, double mass, bool gravity) {
    UnitScale s;
    s.lambda_abs = lambda_abs;
    s.mass = mass;
    s.gravity = gravity;
    return s.field_unit();
  }, py::arg("lambda_abs"), py::arg("mass") = constants::electron_mass,
     py::arg("gravity") = false);
}
