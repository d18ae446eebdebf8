#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minsurf/evolution.hpp"
#include "minsurf/graph_solver.hpp"
#include "minsurf/initial_data.hpp"
#include "minsurf/profiles.hpp"
#include "minsurf/reconstruction.hpp"
#include "minsurf/scenario.hpp"

namespace py = pybind11;
using namespace minsurf;

namespace {

SampledFunction1D from_values(double origin, double h, const std::vector<double>& v) {
  return SampledFunction1D(GridSpec1D(origin, h, static_cast<int>(v.size())), v);
}

py::dict profile_dict(const SampledFunction1D& f) {
  py::dict d;
  d["origin"] = f.grid.origin;
  d["h"] = f.grid.h;
  d["values"] = f.values;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "core operations: initial-data conversion, evolution, reconstruction";

  py::register_exception<Error>(m, "MinsurfError");

  m.def(
      "convert",
      [](double origin, double h, const std::vector<double>& phi0,
         const std::vector<double>& phi1) {
        GraphData g(from_values(origin, h, phi0), from_values(origin, h, phi1));
        GeometricData gd = graph_to_geometric(g);
        py::dict d;
        d["lambda0"] = profile_dict(gd.lambda0);
        d["nu0"] = profile_dict(gd.nu0);
        d["psi0"] = profile_dict(gd.psi0);
        d["psi1"] = profile_dict(gd.psi1);
        return d;
      },
      py::arg("origin"), py::arg("h"), py::arg("phi0"), py::arg("phi1"),
      "Convert a graph jet (phi, phi_t) on a uniform grid to the geometric "
      "data (lambda0, nu0, psi0, psi1).");

  m.def(
      "evolve",
      [](double origin, double h, const std::vector<double>& lambda0,
         const std::vector<double>& nu0, const std::vector<double>& psi0,
         const std::vector<double>& psi1, double t_final, double cfl,
         const std::string& scheme) {
        GeometricData gd(from_values(origin, h, lambda0), from_values(origin, h, nu0),
                         from_values(origin, h, psi0), from_values(origin, h, psi1));
        EvolveConfig c;
        c.cfl = cfl;
        c.t_final = t_final;
        Evolution ev = scheme == "characteristic" ? evolve_characteristic(gd, c)
                                                  : evolve_leapfrog(gd, c);
        py::dict d;
        d["dt"] = ev.psi.dt;
        d["nt"] = ev.psi.nt;
        d["nr"] = ev.psi.nr;
        d["psi"] = ev.psi.v;  // row-major, nt x nr
        d["trusted_slope"] = ev.trusted.slope;
        return d;
      },
      py::arg("origin"), py::arg("h"), py::arg("lambda0"), py::arg("nu0"),
      py::arg("psi0"), py::arg("psi1"), py::arg("t_final"), py::arg("cfl") = 1.0,
      py::arg("scheme") = "leapfrog",
      "Evolve geometric data; returns the psi lattice and its shape.");

  m.def(
      "evolve_graph",
      [](double origin, double h, const std::vector<double>& phi0,
         const std::vector<double>& phi1, double t_final, double cfl) {
        GraphData g(from_values(origin, h, phi0), from_values(origin, h, phi1));
        EvolveConfig c;
        c.cfl = cfl;
        c.t_final = t_final;
        GraphEvolution ev = evolve_graph(g, c);
        py::dict d;
        d["dt"] = ev.phi.dt;
        d["nt"] = ev.phi.nt;
        d["nr"] = ev.phi.nr;
        d["phi"] = ev.phi.v;
        d["phi_t"] = ev.phi_t.v;
        return d;
      },
      py::arg("origin"), py::arg("h"), py::arg("phi0"), py::arg("phi1"),
      py::arg("t_final"), py::arg("cfl") = 0.9,
      "Solve the quasilinear graph equation directly.");

  m.def(
      "reconstruct",
      [](double origin, double h, const std::vector<double>& phi0,
         const std::vector<double>& phi1) {
        GraphData g(from_values(origin, h, phi0), from_values(origin, h, phi1));
        GeometricData gd = graph_to_geometric(g);
        SliceFrame frame = integrate_slice_frame(gd, seed_from_graph(g));
        Embedding emb = assemble_embedding(frame);
        py::list pts;
        const int n = static_cast<int>(frame.grid.count);
        for (int k = 0; k < n; ++k) {
          const Vec3& X = frame.nodes[k].X;
          pts.append(py::make_tuple(X[0], X[1], X[2]));
        }
        py::dict d;
        d["slice_points"] = pts;
        d["u_origin"] = emb.ugrid.origin;
        d["v_origin"] = emb.vgrid.origin;
        d["du"] = emb.ugrid.h;
        return d;
      },
      py::arg("origin"), py::arg("h"), py::arg("phi0"), py::arg("phi1"),
      "Reconstruct the immersed slice (t, x, phi) from graph data.");
}
