#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "leipnik/core.hpp"
#include "leipnik/dynamics.hpp"
#include "leipnik/entropy.hpp"
#include "leipnik/errors.hpp"
#include "leipnik/expr.hpp"
#include "leipnik/model.hpp"
#include "leipnik/modes.hpp"
#include "leipnik/random_phase.hpp"
#include "leipnik/scan.hpp"
#include "leipnik/scenario.hpp"

namespace py = pybind11;
using namespace leipnik;

PYBIND11_MODULE(_leipnik, m) {
    m.doc() = "entropy of gaussian packets under time-dependent quadratic "
              "hamiltonians";

    // base first so the derived translators run before it
    const auto err = py::register_exception<Error>(m, "Error");
    py::register_exception<ConfigError>(m, "ConfigError", err);
    py::register_exception<WronskianDriftExceeded>(m, "WronskianDriftExceeded", err);

    m.attr("entropy_floor") = entropy_floor;

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def(py::init<double>(), py::arg("hbar"))
        .def_property_readonly("hbar", &PhysicalConstants::hbar);

    py::class_<ModeState>(m, "ModeState")
        .def(py::init<>())
        .def(py::init([](double t, complex u, complex du) {
                 return ModeState{t, u, du};
             }),
             py::arg("t"), py::arg("u"), py::arg("du"))
        .def_readwrite("t", &ModeState::t)
        .def_readwrite("u", &ModeState::u)
        .def_readwrite("du", &ModeState::du)
        .def("__repr__", [](const ModeState& s) {
            std::ostringstream os;
            os << "ModeState(t=" << s.t << ", u=(" << s.u.real() << '+'
               << s.u.imag() << "j), du=(" << s.du.real() << '+' << s.du.imag()
               << "j))";
            return os.str();
        });

    py::class_<VariancePair>(m, "VariancePair")
        .def_readonly("dx", &VariancePair::dx)
        .def_readonly("dp", &VariancePair::dp)
        .def("product", &VariancePair::product);

    py::class_<SqueezeParams>(m, "SqueezeParams")
        .def(py::init<double, double>(), py::arg("r"), py::arg("theta"))
        .def_property_readonly("r", &SqueezeParams::r)
        .def_property_readonly("theta", &SqueezeParams::theta);

    py::class_<BogoliubovCoeffs>(m, "BogoliubovCoeffs")
        .def_readonly("alpha", &BogoliubovCoeffs::alpha)
        .def_readonly("beta", &BogoliubovCoeffs::beta);

    m.def("reduce_angle", &reduce_angle, py::arg("theta"));
    m.def("wronskian", &wronskian, py::arg("mode"), py::arg("m"));
    m.def("variances", &variances, py::arg("mode"), py::arg("m"),
          py::arg("consts") = PhysicalConstants{});
    m.def("squeeze_mode", &squeeze_mode, py::arg("ref"), py::arg("sq"));
    m.def("bogoliubov_coeffs", &bogoliubov_coeffs, py::arg("sq"));

    py::class_<QuadraticModel>(m, "QuadraticModel")
        .def_static("free_particle", &QuadraticModel::free_particle,
                    py::arg("m0") = 1.0)
        .def_static("oscillator", &QuadraticModel::oscillator, py::arg("m0"),
                    py::arg("omega0"))
        .def_static("caldirola_kanai", &QuadraticModel::caldirola_kanai,
                    py::arg("m0"), py::arg("omega0"), py::arg("gamma"))
        .def("mass", &QuadraticModel::mass, py::arg("t"))
        .def("omega_sq", &QuadraticModel::omega_sq, py::arg("t"))
        .def("force", &QuadraticModel::force, py::arg("t"))
        .def("characteristic_time", &QuadraticModel::characteristic_time)
        .def("with_force", &QuadraticModel::with_force, py::arg("force"))
        .def_property_readonly("label", &QuadraticModel::label);

    m.def("model_from_expressions", &model_from_expressions, py::arg("mass"),
          py::arg("omega_sq"), py::arg("force"),
          py::arg("params") = std::map<std::string, double>{});

    m.def("free_mode", &free_mode, py::arg("m0"), py::arg("t"));
    m.def("oscillator_mode", &oscillator_mode, py::arg("m0"), py::arg("omega0"),
          py::arg("t"));
    m.def("caldirola_kanai_mode", &caldirola_kanai_mode, py::arg("m0"),
          py::arg("omega0"), py::arg("gamma"), py::arg("t"));

    py::class_<ClosedFormMode>(m, "ClosedFormMode")
        .def(py::init<QuadraticModel>(), py::arg("model"))
        .def("at", &ClosedFormMode::at, py::arg("t"));

    py::class_<Expr>(m, "Expr")
        .def("eval", &Expr::eval, py::arg("t"),
             py::arg("params") = std::map<std::string, double>{})
        .def_property_readonly("parameters", &Expr::parameters)
        .def("__str__", &Expr::str);
    m.def("parse_expression",
          [](const std::string& text) { return parse_expression(text); },
          py::arg("text"));

    py::class_<IntegratorConfig>(m, "IntegratorConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &IntegratorConfig::rel_tol)
        .def_readwrite("abs_tol", &IntegratorConfig::abs_tol)
        .def_readwrite("max_step", &IntegratorConfig::max_step)
        .def_readwrite("wronskian_alarm", &IntegratorConfig::wronskian_alarm);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("states", &Trajectory::states)
        .def_readonly("mass", &Trajectory::mass)
        .def_readonly("max_wronskian_drift", &Trajectory::max_wronskian_drift)
        .def_readonly("n_steps", &Trajectory::n_steps)
        .def_readonly("n_rejected", &Trajectory::n_rejected);

    py::class_<CentroidState>(m, "CentroidState")
        .def(py::init<>())
        .def(py::init([](double t, double x, double p) {
                 CentroidState c;
                 c.t = t;
                 c.x = x;
                 c.p = p;
                 return c;
             }),
             py::arg("t"), py::arg("x"), py::arg("p"))
        .def_readwrite("t", &CentroidState::t)
        .def_readwrite("x", &CentroidState::x)
        .def_readwrite("p", &CentroidState::p)
        .def_readwrite("action", &CentroidState::action);

    py::class_<CentroidTrajectory>(m, "CentroidTrajectory")
        .def_readonly("states", &CentroidTrajectory::states);

    m.def("integrate_mode", &integrate_mode, py::arg("model"), py::arg("init"),
          py::arg("t_grid"), py::arg("config") = IntegratorConfig{});
    m.def("integrate_centroid", &integrate_centroid, py::arg("model"),
          py::arg("init"), py::arg("t_grid"),
          py::arg("config") = IntegratorConfig{});

    py::enum_<DensityKind>(m, "DensityKind")
        .value("position", DensityKind::Position)
        .value("momentum", DensityKind::Momentum);

    py::class_<GaussianPacket>(m, "GaussianPacket")
        .def(py::init<>())
        .def_readwrite("mode", &GaussianPacket::mode)
        .def_readwrite("x_c", &GaussianPacket::x_c)
        .def_readwrite("p_c", &GaussianPacket::p_c)
        .def_readwrite("s_c", &GaussianPacket::s_c);

    py::class_<DensityGrid>(m, "DensityGrid")
        .def_readonly("kind", &DensityGrid::kind)
        .def_readonly("axis", &DensityGrid::axis)
        .def_readonly("values", &DensityGrid::values)
        .def("integral", &DensityGrid::integral)
        .def("second_moment", &DensityGrid::second_moment, py::arg("center"));

    m.def("evaluate_density", &evaluate_density, py::arg("packet"), py::arg("m"),
          py::arg("kind"), py::arg("n_points") = 512, py::arg("width") = 8.0,
          py::arg("consts") = PhysicalConstants{});

    m.def("joint_entropy", &joint_entropy, py::arg("variances"),
          py::arg("consts") = PhysicalConstants{});
    m.def("leipnik_numeric", &leipnik_numeric, py::arg("position"),
          py::arg("momentum"), py::arg("consts") = PhysicalConstants{});
    m.def("free_entropy_closed", &free_entropy_closed, py::arg("sq"), py::arg("T"));
    m.def("initial_entropy", &initial_entropy, py::arg("sq"));
    m.def("entropy_minimum_time", &entropy_minimum_time, py::arg("sq"),
          py::arg("m0") = 1.0);
    m.def("oscillator_entropy_closed", &oscillator_entropy_closed, py::arg("sq"),
          py::arg("omega0"), py::arg("t"));
    m.def("oscillator_entropy_max", &oscillator_entropy_max, py::arg("r"));

    m.def("random_phase_closed", &random_phase_closed, py::arg("r"),
          py::arg("ref"), py::arg("m"));
    m.def("random_phase_quadrature", &random_phase_quadrature, py::arg("r"),
          py::arg("ref"), py::arg("m"), py::arg("n_nodes") = 512);
    m.def("log_integral_identity", &log_integral_identity, py::arg("a"),
          py::arg("b"), py::arg("c"));
    m.def("minimal_uncertainty_identity", &minimal_uncertainty_identity,
          py::arg("ref"), py::arg("m"));
    m.def("energy_expectation", &energy_expectation, py::arg("ref"),
          py::arg("model"), py::arg("t"), py::arg("consts") = PhysicalConstants{});
    m.def("random_phase_lower_bound", &random_phase_lower_bound, py::arg("r"));

    py::class_<RandomPhaseBounds>(m, "RandomPhaseBounds")
        .def_readonly("lower", &RandomPhaseBounds::lower)
        .def_readonly("upper", &RandomPhaseBounds::upper)
        .def_readonly("lower_alt", &RandomPhaseBounds::lower_alt)
        .def_readonly("upper_alt", &RandomPhaseBounds::upper_alt);
    m.def("random_phase_bounds", &random_phase_bounds, py::arg("r"),
          py::arg("ref"), py::arg("model"), py::arg("t"),
          py::arg("consts") = PhysicalConstants{});

    py::class_<Scenario>(m, "Scenario")
        .def_static("from_json_text", &Scenario::from_json_text, py::arg("text"))
        .def_static("from_file", &Scenario::from_file, py::arg("path"));
    m.def("figure_preset", &figure_preset, py::arg("which"));

    py::class_<RunOptions>(m, "RunOptions")
        .def(py::init<>())
        .def_readwrite("jobs", &RunOptions::jobs)
        .def_readwrite("quad_nodes", &RunOptions::quad_nodes);

    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("r", &ScanRow::r)
        .def_readonly("theta", &ScanRow::theta)
        .def_readonly("t", &ScanRow::t)
        .def_readonly("dx", &ScanRow::dx)
        .def_readonly("dp", &ScanRow::dp)
        .def_readonly("S", &ScanRow::s)
        .def_readonly("S_minus_floor", &ScanRow::s_minus_floor)
        .def_readonly("S_bar", &ScanRow::s_bar)
        .def_readonly("lower", &ScanRow::lower)
        .def_readonly("upper", &ScanRow::upper);

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("with_s_bar", &ScanResult::with_s_bar)
        .def_readonly("with_bounds", &ScanResult::with_bounds)
        .def_readonly("rows", &ScanResult::rows)
        .def("csv", &ScanResult::csv);

    py::class_<ValidationCheck>(m, "ValidationCheck")
        .def_readonly("name", &ValidationCheck::name)
        .def_readonly("passed", &ValidationCheck::passed)
        .def_readonly("informational", &ValidationCheck::informational)
        .def_readonly("detail", &ValidationCheck::detail);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("model_label", &ValidationReport::model_label)
        .def_readonly("checks", &ValidationReport::checks)
        .def("passed", &ValidationReport::passed)
        .def("text", &ValidationReport::text);

    py::class_<TStarRow>(m, "TStarRow")
        .def_readonly("r", &TStarRow::r)
        .def_readonly("theta", &TStarRow::theta)
        .def_readonly("t_star", &TStarRow::t_star)
        .def_readonly("S_at_t_star", &TStarRow::s_at_t_star)
        .def_readonly("t_grid_min", &TStarRow::t_grid_min)
        .def_readonly("S_grid_min", &TStarRow::s_grid_min);

    py::class_<TStarResult>(m, "TStarResult")
        .def_readonly("rows", &TStarResult::rows)
        .def("csv", &TStarResult::csv);

    m.def("run_scan", &run_scan, py::arg("scenario"),
          py::arg("options") = RunOptions{});
    m.def("run_validate", &run_validate, py::arg("scenario"),
          py::arg("options") = RunOptions{});
    m.def("run_tstar", &run_tstar, py::arg("scenario"),
          py::arg("options") = RunOptions{});
    m.def("default_custom_init", &default_custom_init, py::arg("model"),
          py::arg("t0"));
}
