// Python bindings for the core operations: forward simulation, moment
// evaluation, and the inversion pipeline.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "linerec/forward.hpp"
#include "linerec/kernel.hpp"
#include "linerec/moments.hpp"
#include "linerec/polyroots.hpp"
#include "linerec/prony.hpp"
#include "linerec/rng.hpp"
#include "linerec/scenario_io.hpp"
#include "linerec/silent.hpp"
#include "linerec/studies.hpp"

namespace py = pybind11;
using namespace linerec;

PYBIND11_MODULE(_linerec, m) {
  m.doc() = "Reconstruction of line-current positions and phasor currents "
            "from magnetic field samples on a surrounding contour.";

  py::register_exception<Error>(m, "LinerecError");

  py::class_<Point2>(m, "Point2")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readonly("x", &Point2::x)
      .def_readonly("y", &Point2::y)
      .def("__repr__", [](const Point2& p) {
        return "Point2(" + std::to_string(p.x) + ", " + std::to_string(p.y) +
               ")";
      });

  py::class_<Conductor>(m, "Conductor")
      .def(py::init<Point2, Phasor>(), py::arg("position"), py::arg("current"))
      .def_readonly("position", &Conductor::position)
      .def_readonly("current", &Conductor::current);

  py::class_<FieldSample>(m, "FieldSample")
      .def(py::init<Point2, Phasor, Phasor>(), py::arg("position"),
           py::arg("bx"), py::arg("by"))
      .def_readonly("position", &FieldSample::position)
      .def_readonly("bx", &FieldSample::bx)
      .def_readonly("by", &FieldSample::by);

  py::class_<MeasurementSet>(m, "MeasurementSet")
      .def(py::init<std::vector<FieldSample>, double, Point2>(),
           py::arg("samples"), py::arg("r_meas"), py::arg("center") = Point2{})
      .def_property_readonly("samples", &MeasurementSet::samples)
      .def_property_readonly("r_meas", &MeasurementSet::r_meas)
      .def("signed_area", &MeasurementSet::signed_area)
      .def("parity_subset", &MeasurementSet::parity_subset)
      .def("__len__", &MeasurementSet::size);

  py::class_<MomentVector>(m, "MomentVector")
      .def(py::init<std::vector<Phasor>>(), py::arg("values"))
      .def_property_readonly("values", &MomentVector::values)
      .def("__len__", &MomentVector::size)
      .def("__getitem__",
           [](const MomentVector& b, std::size_t m) {
             if (m >= b.size()) throw py::index_error();
             return b[m];
           });

  py::class_<HarmonicKernel>(m, "HarmonicKernel")
      .def(py::init<double>(), py::arg("r_scale"))
      .def_property_readonly("r_scale", &HarmonicKernel::r_scale)
      .def("eval", &HarmonicKernel::eval, py::arg("r"))
      .def("invert", &HarmonicKernel::invert, py::arg("f_val"))
      .def("in_strip", &HarmonicKernel::in_strip, py::arg("r"));

  py::class_<NoiseSpec>(m, "NoiseSpec")
      .def(py::init<double, std::uint64_t>(), py::arg("sigma_ref"),
           py::arg("seed"))
      .def_readonly("sigma_ref", &NoiseSpec::sigma_ref)
      .def_readonly("seed", &NoiseSpec::seed);

  py::class_<ReconParams>(m, "ReconParams")
      .def(py::init([](int n, int m_offset, int l_offset, int quad_order) {
             return ReconParams{n, m_offset, l_offset, quad_order};
           }),
           py::arg("n"), py::arg("m_offset") = 1, py::arg("l_offset") = 1,
           py::arg("quadrature_order") = 8)
      .def_readwrite("n", &ReconParams::n)
      .def_readwrite("m_offset", &ReconParams::m_offset)
      .def_readwrite("l_offset", &ReconParams::l_offset)
      .def_readwrite("quadrature_order", &ReconParams::quadrature_order);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("internal_conductors", &Scenario::internal_conductors)
      .def_readwrite("external_conductors", &Scenario::external_conductors)
      .def_readwrite("r_meas", &Scenario::r_meas)
      .def_readwrite("n_meas", &Scenario::n_meas)
      .def_readwrite("noise", &Scenario::noise)
      .def_readwrite("recon", &Scenario::recon);

  py::class_<ReconstructionResult>(m, "ReconstructionResult")
      .def_readonly("conductors", &ReconstructionResult::conductors)
      .def_readonly("root_values", &ReconstructionResult::root_values)
      .def_readonly("cond_c", &ReconstructionResult::cond_c)
      .def_readonly("cond_f", &ReconstructionResult::cond_f)
      .def_readonly("moment_residual", &ReconstructionResult::moment_residual);

  m.attr("MU0") = kMu0;

  m.def(
      "field_at",
      [](const std::vector<Conductor>& conductors, const Point2& r) {
        const FieldVec f = field_at(conductors, r);
        return py::make_tuple(f.bx, f.by);
      },
      py::arg("conductors"), py::arg("r"),
      "Transverse field (bx, by) of a set of line currents.");
  m.def(
      "sample_circle",
      [](const std::vector<Conductor>& conductors, double r_meas, int n_meas,
         const Point2& center) {
        return sample_circle(conductors, r_meas, n_meas, center);
      },
      py::arg("conductors"), py::arg("r_meas"), py::arg("n_meas"),
      py::arg("center") = Point2{},
      "Uniform counterclockwise circular sampling of the field.");
  m.def("mean_field_magnitude", &mean_field_magnitude, py::arg("samples"));
  m.def("add_noise", &add_noise, py::arg("samples"), py::arg("spec"),
        "Seeded Gaussian noise on every field scalar.");
  m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("index"));

  m.def(
      "exact_moments",
      [](const std::vector<Conductor>& conductors, const HarmonicKernel& k,
         int m_max) { return exact_moments(conductors, k, m_max); },
      py::arg("conductors"), py::arg("kernel"), py::arg("m_max"));
  m.def("segment_moment", &segment_moment, py::arg("a"), py::arg("b"),
        py::arg("kernel"), py::arg("m"), py::arg("quad_order") = 8);
  m.def("contour_moments", &contour_moments, py::arg("samples"),
        py::arg("kernel"), py::arg("m_max"), py::arg("quad_order") = 8);
  m.def("richardson", &richardson, py::arg("b_all"), py::arg("b_even"),
        py::arg("b_odd"));
  m.def("extrapolated_moments", &extrapolated_moments, py::arg("samples"),
        py::arg("kernel"), py::arg("m_max"), py::arg("quad_order") = 8);

  m.def(
      "solve_coefficients",
      [](const MomentVector& b, int n, int l_offset) {
        return solve_coefficients(b, n, l_offset);
      },
      py::arg("moments"), py::arg("n"), py::arg("l_offset") = 1);
  m.def(
      "roots_of_monic",
      [](const std::vector<Phasor>& coeffs) { return roots_of_monic(coeffs); },
      py::arg("coeffs"));
  m.def(
      "solve_currents",
      [](const std::vector<Phasor>& roots, const MomentVector& b,
         int m_offset) { return solve_currents(roots, b, m_offset); },
      py::arg("roots"), py::arg("moments"), py::arg("m_offset") = 1);
  m.def("reconstruct", &reconstruct, py::arg("moments"), py::arg("kernel"),
        py::arg("n"), py::arg("m_offset") = 1, py::arg("l_offset") = 1);
  m.def(
      "currents_only",
      [](const std::vector<Point2>& positions, const MomentVector& b,
         const HarmonicKernel& k, int m_offset) {
        return currents_only(positions, b, k, m_offset);
      },
      py::arg("positions"), py::arg("moments"), py::arg("kernel"),
      py::arg("m_offset") = 1);
  m.def("reconstruct_from_samples", &reconstruct_from_samples,
        py::arg("samples"), py::arg("kernel"), py::arg("params"),
        "Full/even/odd moments, Richardson extrapolation, inversion.");

  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def(
      "validate_scenario",
      [](const Scenario& s) { return validate_scenario(s).violations; },
      py::arg("scenario"),
      "List of violated invariants; empty when the scenario is valid.");
  m.def(
      "sample_scenario",
      [](const Scenario& s) { return sample_circle(s); }, py::arg("scenario"));

  py::class_<NoiseParams>(m, "NoiseParams")
      .def(py::init<>())
      .def_readwrite("sigma_ref", &NoiseParams::sigma_ref)
      .def_readwrite("seed", &NoiseParams::seed)
      .def_readwrite("runs", &NoiseParams::runs);

  py::class_<CleanStudyRow>(m, "CleanStudyRow")
      .def_readonly("n_meas", &CleanStudyRow::n_meas)
      .def_readonly("ok", &CleanStudyRow::ok)
      .def_readonly("error", &CleanStudyRow::error)
      .def_readonly("dx_pct", &CleanStudyRow::dx_pct)
      .def_readonly("dy_pct", &CleanStudyRow::dy_pct)
      .def_readonly("currents", &CleanStudyRow::currents)
      .def_readonly("reconstructed", &CleanStudyRow::reconstructed)
      .def_readonly("cond_c", &CleanStudyRow::cond_c)
      .def_readonly("cond_f", &CleanStudyRow::cond_f)
      .def_readonly("moment_residual", &CleanStudyRow::moment_residual);

  py::class_<RunRecord>(m, "RunRecord")
      .def_readonly("run_index", &RunRecord::run_index)
      .def_readonly("seed", &RunRecord::seed)
      .def_readonly("ok", &RunRecord::ok)
      .def_readonly("error", &RunRecord::error)
      .def_readonly("conductors", &RunRecord::conductors)
      .def_readonly("position_errors", &RunRecord::position_errors)
      .def_readonly("current_errors", &RunRecord::current_errors);

  py::class_<ConductorStats>(m, "ConductorStats")
      .def_readonly("mean_position", &ConductorStats::mean_position)
      .def_readonly("position_rms", &ConductorStats::position_rms)
      .def_readonly("mean_current", &ConductorStats::mean_current)
      .def_readonly("current_rms", &ConductorStats::current_rms);

  py::class_<MonteCarloResult>(m, "MonteCarloResult")
      .def_readonly("runs", &MonteCarloResult::runs)
      .def_readonly("summary", &MonteCarloResult::summary)
      .def_readonly("failures", &MonteCarloResult::failures);

  py::class_<Table2Row>(m, "Table2Row")
      .def_readonly("m", &Table2Row::m)
      .def_readonly("even", &Table2Row::even)
      .def_readonly("odd", &Table2Row::odd)
      .def_readonly("all", &Table2Row::all)
      .def_readonly("extrapol", &Table2Row::extrapol)
      .def_readonly("exact", &Table2Row::exact);

  m.def(
      "run_clean_study",
      [](const Scenario& s, const std::vector<int>& n_list) {
        return n_list.empty() ? run_clean_study(s)
                              : run_clean_study(s, n_list);
      },
      py::arg("scenario"), py::arg("n_list") = std::vector<int>{},
      "Noise-free study over several contour resolutions.");
  m.def("run_montecarlo", &run_montecarlo, py::arg("scenario"),
        "Seeded noise study; failed runs are recorded, never dropped.");
  m.def("emit_table2", &emit_table2, py::arg("scenario"), py::arg("m_min") = 1,
        py::arg("m_max") = 6,
        "Half-set / full-set / extrapolated / direct moment comparison.");
}
