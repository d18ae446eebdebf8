#pragma once

#include "minsurf/fields.hpp"

namespace minsurf {

// Graphical Cauchy data for the quasilinear equation: phi0 = phi|_{t=0},
// phi1 = dphi/dt|_{t=0}, on a shared grid.
struct GraphData {
  SampledFunction1D phi0;
  SampledFunction1D phi1;

  GraphData(SampledFunction1D p0, SampledFunction1D p1)
      : phi0(std::move(p0)), phi1(std::move(p1)) {
    if (!phi0.grid.same_as(phi1.grid))
      fail(ErrorKind::invalid_input, "GraphData: phi0 and phi1 grids differ");
  }
};

// Geometric Cauchy data (lambda0, nu0, psi0, psi1) on a common r-grid.
struct GeometricData {
  SampledFunction1D lambda0, nu0, psi0, psi1;

  GeometricData(SampledFunction1D l, SampledFunction1D n,
                SampledFunction1D p0, SampledFunction1D p1)
      : lambda0(std::move(l)), nu0(std::move(n)),
        psi0(std::move(p0)), psi1(std::move(p1)) {
    if (!lambda0.grid.same_as(nu0.grid) || !lambda0.grid.same_as(psi0.grid) ||
        !lambda0.grid.same_as(psi1.grid))
      fail(ErrorKind::invalid_input, "GeometricData: profiles must share one grid");
  }
  const GridSpec1D& grid() const { return lambda0.grid; }
};

// Transported profiles: Lambda over u, V over v. lambda(t,r) = Lambda((r+t)/2)
// and nu(t,r) = V((r-t)/2); the independence statements hold by representation.
struct NullPair {
  SampledFunction1D Lambda;  // over u
  SampledFunction1D V;       // over v
};

struct TimelikeCheck {
  bool ok = false;
  double min_radicand = 0.0;
  int argmin = 0;
};

// radicand 1 - phi1^2 + phi0'^2 at every node; ok iff strictly positive.
TimelikeCheck validate_timelike(const GraphData& g);

// Pointwise slice conversion output at one node (gauge u = v = x/2).
struct SlicePoint {
  double psi0, psi1, lambda0, nu0;
  double psi_u, psi_v;   // psi_u = psi0' + psi1, psi_v = psi0' - psi1
  double Lt, Lx, Nt, Nx; // null frame components in graph (t,x) coordinates
  double radicand;
};

// Closed-form conversion of the graph 2-jet (phi0, phi0', phi0'', phi1, phi1')
// at one node. phi_tt is eliminated through the quasilinear equation.
SlicePoint convert_jet(double phi0p, double phi0pp, double phi1, double phi1p);

// Convert graphical data to geometric data on the same r-grid (r = x on the
// slice). Derivatives of the profiles are taken by second-order differences.
GeometricData graph_to_geometric(const GraphData& g);

// Reindex the initial profiles to the transported single-variable profiles:
// Lambda(c) = lambda0(2c), V(c) = nu0(2c).
NullPair transport_profiles(const GeometricData& gd);

}  // namespace minsurf
