// Python bindings for the splitting-scheme toolkit: stability machinery,
// problem definitions, hexagon mesh / partition-of-unity helpers, and the
// convergence-study drivers, mirroring the command line surface.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "splitkit/femdd.hpp"
#include "splitkit/harness.hpp"
#include "splitkit/problems.hpp"
#include "splitkit/stability.hpp"

namespace py = pybind11;
using namespace splitkit;

namespace {

Z0Mode z0_mode_from_string(const std::string& s) {
  if (s == "zero") return Z0Mode::Zero;
  if (s == "unit_disk_shifted") return Z0Mode::UnitDiskShifted;
  throw std::invalid_argument("z0_mode must be 'zero' or 'unit_disk_shifted'");
}

AdvDiffDiscretization disc_from_string(const std::string& s) {
  if (s == "central") return AdvDiffDiscretization::Central;
  if (s == "upwind") return AdvDiffDiscretization::Upwind;
  throw std::invalid_argument("discretization must be 'central' or 'upwind'");
}

RegionCondition condition_from_string(const std::string& s) {
  if (s == "r") return RegionCondition::Full;
  if (s == "rstar") return RegionCondition::Star;
  throw std::invalid_argument("condition must be 'r' or 'rstar'");
}

HeatVariant heat_variant_from_string(const std::string& s) {
  if (s == "poly") return HeatVariant::Poly;
  if (s == "linear_t") return HeatVariant::LinearT;
  throw std::invalid_argument("variant must be 'poly' or 'linear_t'");
}

std::string records_to_csv(const std::vector<ConvergenceRecord>& records) {
  std::ostringstream os;
  write_convergence_csv(os, records);
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "splitting time-integrator toolkit";

  // --- stability -------------------------------------------------------
  m.def(
      "stability_r",
      [](const std::vector<Complex>& z) { return stability_r(z); }, py::arg("z"),
      "Amplification factor r(z0, ..., zs) of the corrected splitting step.");
  m.def(
      "stability_r_star",
      [](Complex z0, const std::vector<Complex>& z_head) { return stability_r_star(z0, z_head); },
      py::arg("z0"), py::arg("z_head") = std::vector<Complex>{},
      "Limit of r as the last implicit argument goes to -infinity.");
  m.def("in_wedge", &in_wedge, py::arg("z"), py::arg("alpha"),
        "Membership in the wedge W_alpha around the negative real axis.");
  m.def(
      "sample_wedge_max",
      [](int s, double alpha, int n_samples, std::uint64_t seed, const std::string& z0_mode) {
        return sample_wedge_max(s, alpha, n_samples, seed, z0_mode_from_string(z0_mode));
      },
      py::arg("s"), py::arg("alpha"), py::arg("n_samples") = 200000, py::arg("seed") = 1,
      py::arg("z0_mode") = "zero",
      "Randomized search for max |r| over wedge-boundary spectra; deterministic in the seed.");
  m.def(
      "advdiff_eigenvalues",
      [](double mu, double nu, double phi, const std::string& disc) {
        return advdiff_eigenvalues(AdvDiffParams::from_mu_nu(mu, nu), phi,
                                   disc_from_string(disc));
      },
      py::arg("mu"), py::arg("nu"), py::arg("phi"), py::arg("disc") = "central",
      "Fourier symbols (z0, z1) of explicit advection and implicit diffusion at angle phi.");
  m.def(
      "scan_stability_region",
      [](const std::vector<double>& mu_grid, const std::vector<double>& nu_grid,
         const std::string& condition, int phi_samples) {
        const RegionScan scan =
            scan_stability_region(mu_grid, nu_grid, condition_from_string(condition), phi_samples);
        std::vector<std::vector<bool>> rows(mu_grid.size());
        for (std::size_t i = 0; i < mu_grid.size(); ++i) {
          rows[i].resize(nu_grid.size());
          for (std::size_t j = 0; j < nu_grid.size(); ++j) rows[i][j] = scan.at(i, j);
        }
        return rows;
      },
      py::arg("mu_grid"), py::arg("nu_grid"), py::arg("condition") = "rstar",
      py::arg("phi_samples") = 256,
      "Stability mask over the (mu, nu) grid; rows indexed by mu, columns by nu.");
  m.def(
      "upwind_equivalent_split",
      [](double a, double d, double h) {
        const SplitStencils st = upwind_equivalent_split(a, d, h);
        return py::make_tuple(st.advective, st.diffusive);
      },
      py::arg("a"), py::arg("d"), py::arg("h"),
      "([left, center, right] advective, diffusive) stencils; requires mu = a*h/d <= 2.");

  // --- problems --------------------------------------------------------
  m.def(
      "heat_mms",
      [](const std::string& variant, double x, double y, double t) {
        const HeatMMS mms{heat_variant_from_string(variant)};
        return py::make_tuple(mms.exact(x, y, t), mms.forcing(x, y, t));
      },
      py::arg("variant"), py::arg("x"), py::arg("y"), py::arg("t"),
      "Manufactured heat solution: (exact value, matching source).");
  m.def(
      "traveling_wave_exact",
      [](double epsilon, double x, double y, double t) {
        return traveling_wave_exact(TravelingWaveParams::standard(epsilon), x, y, t);
      },
      py::arg("epsilon"), py::arg("x"), py::arg("y"), py::arg("t"),
      "Planar wave profile for u_t = eps lap(u) + 50 u^2 (1 - u).");
  m.def(
      "schnakenberg_reaction",
      [](double u, double v) {
        const SchnakParams p;
        double du = 0.0, dv = 0.0;
        schnakenberg_reaction(p, u, v, du, dv);
        return py::make_tuple(du, dv);
      },
      py::arg("u"), py::arg("v"), "Two-species kinetics (du, dv) at the standard parameters.");
  m.def(
      "schnakenberg_steady",
      []() {
        const SchnakParams p;
        return py::make_tuple(p.steady_u(), p.steady_v());
      },
      "Homogeneous steady state (u*, v*).");

  // --- mesh and partition of unity --------------------------------------
  py::class_<MeshHex>(m, "MeshHex")
      .def_readonly("n_sub", &MeshHex::n_sub)
      .def_readonly("h", &MeshHex::h)
      .def_readonly("nodes", &MeshHex::nodes)
      .def_readonly("triangles", &MeshHex::triangles)
      .def("node_count", &MeshHex::node_count)
      .def("__repr__", [](const MeshHex& mesh) {
        return "MeshHex(n_sub=" + std::to_string(mesh.n_sub) +
               ", nodes=" + std::to_string(mesh.node_count()) +
               ", triangles=" + std::to_string(mesh.triangles.size()) + ")";
      });
  m.def("triangulate_hexagon", &triangulate_hexagon, py::arg("n_sub"),
        "Structured equilateral triangulation of the unit-edge hexagon.");
  m.def(
      "mesh_text",
      [](const MeshHex& mesh) {
        std::ostringstream os;
        write_mesh(os, mesh);
        return os.str();
      },
      py::arg("mesh"), "Plain-text export: 'v x y' and 't i j k' lines.");
  m.def(
      "pou_psi",
      [](double z, int K, double r_overlap) {
        return pou_psi(PartitionOfUnity{K, r_overlap, -1.0, 1.0}, z);
      },
      py::arg("z"), py::arg("K") = 4, py::arg("r_overlap") = 0.1,
      "One-dimensional C^2 partition profile on [-1, 1].");
  m.def(
      "pou_weight",
      [](int k, double x, double y) { return pou_weight(PartitionOfUnity{}, k, x, y); },
      py::arg("k"), py::arg("x"), py::arg("y"),
      "Tensor-product subdomain weight, k in 1..4; the four weights sum to one.");

  // --- convergence studies ----------------------------------------------
  py::class_<ConvergenceRecord>(m, "ConvergenceRecord")
      .def_readonly("scheme", &ConvergenceRecord::scheme)
      .def_readonly("theta", &ConvergenceRecord::theta)
      .def_readonly("dt", &ConvergenceRecord::dt)
      .def_readonly("h", &ConvergenceRecord::h)
      .def_property_readonly("norm",
                             [](const ConvergenceRecord& r) { return norm_name(r.norm); })
      .def_readonly("error", &ConvergenceRecord::error)
      .def_readonly("order", &ConvergenceRecord::order)
      .def("__repr__", [](const ConvergenceRecord& r) {
        std::ostringstream os;
        os << "ConvergenceRecord(scheme='" << r.scheme << "', dt=" << r.dt << ", norm='"
           << norm_name(r.norm) << "', error=";
        if (r.error)
          os << *r.error;
        else
          os << "unstable";
        if (r.order) os << ", order=" << *r.order;
        os << ")";
        return os.str();
      });
  m.def("run_heat_table", &run_heat_table, py::arg("table"),
        py::arg("dt_list") = std::vector<double>{1.0 / 50, 1.0 / 100, 1.0 / 200, 1.0 / 400},
        "Manufactured-heat error table: 1 local L2, 2 global L2, 3 global max.");
  m.def("run_wave_study", &run_wave_study, py::arg("epsilon"), py::arg("h_list"),
        py::arg("t_end") = 1.0,
        "Traveling-wave convergence study; Douglas family at dt = h, extended at dt = 2h.");
  m.def("run_schnak_study", &run_schnak_study, py::arg("n_sub"), py::arg("t_end"),
        py::arg("dt_list"), py::arg("dt_ref") = 0.0, py::arg("n_threads") = 1,
        "Schnakenberg self-convergence on the four-subdomain splitting.");
  m.def(
      "run_schnak_snapshot",
      [](int n_sub, double t_end, double dt, int n_threads) {
        const SchnakSnapshot snap = run_schnak_snapshot(n_sub, t_end, dt, n_threads);
        std::ostringstream os;
        write_snapshot_csv(os, snap);
        return os.str();
      },
      py::arg("n_sub"), py::arg("t_end"), py::arg("dt"), py::arg("n_threads") = 1,
      "Pattern snapshot as CSV text 'x,y,u,v', one row per node.");
  m.def("convergence_csv", &records_to_csv, py::arg("records"),
        "CSV rendering with header scheme,theta,dt,h,norm,error,order.");
}
