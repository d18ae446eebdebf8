#pragma once

#include "minsurf/evolution.hpp"
#include "minsurf/geometry.hpp"
#include "minsurf/initial_data.hpp"

namespace minsurf {

// Direct finite-difference solver for the quasilinear minimal surface
// equation in graph form, used as an independent oracle for the geometric
// pipeline.
struct GraphEvolution {
  Field2D phi;    // phi on the padded (t,x) lattice
  Field2D phi_t;  // centered time derivative on the same lattice
  TrustedRegion trusted;
  double dt = 0.0;
};

struct Jet2 {
  double phi_t, phi_x, phi_tt, phi_tx, phi_xx;
};

// Expanded non-divergence form:
//   (1 + phi_x^2) phi_tt - 2 phi_t phi_x phi_tx - (1 - phi_t^2) phi_xx.
// Vanishes exactly on solutions; requires a timelike jet.
double quasilinear_form(const Jet2& jet);

// Characteristic speeds c = (phi_t phi_x +/- sqrt(Q)) / (1 + phi_x^2); returns
// max |c| over both roots.
double characteristic_speed(double phi_t, double phi_x);

// Iterated leapfrog on phi_tt = [2 phi_t phi_x phi_tx + (1 - phi_t^2) phi_xx]
// / (1 + phi_x^2), with the centered phi_t closed by a short fixed-point loop
// per level. dt is fixed from the worst characteristic speed at t = 0; the
// run aborts if speeds later exceed the CFL budget or the radicand drops
// below 1e-6 on trusted nodes.
GraphEvolution evolve_graph(const GraphData& g, const EvolveConfig& cfg);

}  // namespace minsurf
