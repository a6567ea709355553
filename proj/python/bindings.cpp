#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bellwave/chsh.hpp"
#include "bellwave/sweep.hpp"

namespace py = pybind11;
using namespace bellwave;

namespace {

UnitVector3 direction(const std::array<double, 3>& v) {
  return UnitVector3::normalized(v[0], v[1], v[2]);
}

NumericOptions numeric_options(const std::string& spin_mode, int nodes, double tol, int max_nodes) {
  NumericOptions o;
  if (spin_mode == "full") {
    o.spin_mode = SpinMode::full;
  } else if (spin_mode != "leading") {
    throw ValidationError("spin_mode must be 'leading' or 'full'");
  }
  o.quad.nodes_per_axis = nodes;
  o.quad.target_rel_tol = tol;
  o.quad.max_nodes_per_axis = max_nodes;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bell-CHSH correlations of entangled Dirac wavepackets";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<UndefinedDetectionTime>(m, "UndefinedDetectionTime", PyExc_ValueError);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
  py::register_exception<DegenerateDenominatorError>(m, "DegenerateDenominatorError",
                                                     PyExc_ArithmeticError);

  m.def(
      "to_dimensionless",
      [](double d, double P, double Z, bool allow_relativistic) {
        const auto pt = to_dimensionless({d, P, Z, allow_relativistic});
        return py::make_tuple(pt.zeta, pt.kappa);
      },
      py::arg("d"), py::arg("P"), py::arg("Z"), py::arg("allow_relativistic") = false,
      "(zeta, kappa) = (Z/d, P d).");
  m.def(
      "from_dimensionless",
      [](double zeta, double kappa, double d, bool allow_relativistic) {
        const auto cfg = from_dimensionless({zeta, kappa}, d, allow_relativistic);
        return py::make_tuple(cfg.d, cfg.P, cfg.Z);
      },
      py::arg("zeta"), py::arg("kappa"), py::arg("d") = kDefaultWidth,
      py::arg("allow_relativistic") = false, "(d, P, Z) at the chosen width.");
  m.def(
      "detection_time",
      [](double d, double P, double Z) { return detection_time({d, P, Z, false}); },
      py::arg("d"), py::arg("P"), py::arg("Z"));

  m.def(
      "correlator",
      [](std::array<double, 3> a, std::array<double, 3> b, double zeta, double kappa) {
        return correlator_dimensionless(direction(a), direction(b), {zeta, kappa}).value;
      },
      py::arg("a"), py::arg("b"), py::arg("zeta"), py::arg("kappa"),
      "Closed-form C(a, b) at (zeta, kappa).");
  m.def(
      "correlator_numeric",
      [](std::array<double, 3> a, std::array<double, 3> b, double zeta, double kappa, double d,
         const std::string& spin_mode, int nodes, double tol, int max_nodes) {
        const auto cfg = from_dimensionless({zeta, kappa}, d);
        const auto v = correlator_numeric(direction(a), direction(b), cfg,
                                          numeric_options(spin_mode, nodes, tol, max_nodes));
        return py::make_tuple(v.value, v.err);
      },
      py::arg("a"), py::arg("b"), py::arg("zeta"), py::arg("kappa"), py::arg("d") = kDefaultWidth,
      py::arg("spin_mode") = "leading", py::arg("nodes") = 8, py::arg("tol") = 1e-8,
      py::arg("max_nodes") = 128, "Quadrature C(a, b); returns (value, error estimate).");

  m.def(
      "bell",
      [](double zeta, double kappa) {
        const auto b = bell_closed({zeta, kappa});
        return py::make_tuple(b.B, b.F_perp, b.Phi_par);
      },
      py::arg("zeta"), py::arg("kappa"), "(B, F_perp, Phi_par) in closed form.");
  m.def("bell_limit_infinity", &bell_limit_infinity, py::arg("kappa"));
  m.def("kappa_star", &kappa_star);
  m.def("classical_crossing", &classical_crossing, py::arg("kappa"),
        "Smallest zeta with |B| = 2, or None.");

  m.def(
      "hermite_rule",
      [](int n) {
        const auto& r = hermite_rule(n);
        return py::make_tuple(r.nodes, r.weights);
      },
      py::arg("n"));

  m.def(
      "sweep",
      [](std::vector<double> kappas, double zeta_min, double zeta_max, int count, int jobs) {
        SweepRequest req;
        req.kappa_list = std::move(kappas);
        req.zeta_grid = {zeta_min, zeta_max, count, Spacing::linear};
        py::list out;
        for (const auto& r : run_sweep(req, jobs)) {
          py::dict row;
          row["kappa"] = r.kappa;
          row["zeta"] = r.zeta;
          row["B"] = r.B;
          row["absB"] = r.absB;
          row["F_perp"] = r.F_perp;
          row["Phi_par"] = r.Phi_par;
          out.append(row);
        }
        return out;
      },
      py::arg("kappas"), py::arg("zeta_min") = 0.0, py::arg("zeta_max") = 5.0,
      py::arg("count") = 501, py::arg("jobs") = 1, "Closed-form sweep rows as dicts.");
}
