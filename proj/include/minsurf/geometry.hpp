#pragma once

#include <cmath>
#include <vector>

#include "minsurf/error.hpp"

namespace minsurf {

// Scalar field on a uniform (t,r) lattice, row = time level.
struct Field2D {
  double t0 = 0.0, r0 = 0.0;
  double dt = 1.0, dr = 1.0;
  int nt = 0, nr = 0;
  std::vector<double> v;

  Field2D() = default;
  Field2D(double t0_, double r0_, double dt_, double dr_, int nt_, int nr_)
      : t0(t0_), r0(r0_), dt(dt_), dr(dr_), nt(nt_), nr(nr_),
        v(static_cast<size_t>(nt_) * nr_, 0.0) {
    if (nt_ < 1 || nr_ < 1 || !(dt_ > 0) || !(dr_ > 0))
      fail(ErrorKind::invalid_input, "Field2D: bad lattice");
  }

  double& at(int j, int i) { return v[static_cast<size_t>(j) * nr + i]; }
  double at(int j, int i) const { return v[static_cast<size_t>(j) * nr + i]; }
  double t(int j) const { return t0 + j * dt; }
  double r(int i) const { return r0 + i * dr; }
};

struct ConformalFactorPoint {
  double psi = 0.0;
  double psi_u = 0.0;
  double psi_v = 0.0;
};

// Null components of the second fundamental form, k = lambda L@L + nu N@N.
struct SffPoint {
  double lambda = 0.0;
  double nu = 0.0;
};

// g(d_u, d_v) = e^psi; g_uu = g_vv = 0.
inline double metric_component(double psi) { return std::exp(psi); }

// g^{uv} = e^{-psi}.
inline double inverse_metric_component(double psi) { return std::exp(-psi); }

// Only nonzero Christoffel symbols of the double-null metric:
// Gamma^u_{uu} = psi_u, Gamma^v_{vv} = psi_v.
struct Christoffels {
  double uuu = 0.0;
  double vvv = 0.0;
};
inline Christoffels christoffels(const ConformalFactorPoint& p) {
  return {p.psi_u, p.psi_v};
}

// Riem(L,N,L,N) = e^{-4 psi} lambda nu.
inline double riem_lnln(double psi, const SffPoint& s) {
  return std::exp(-4.0 * psi) * s.lambda * s.nu;
}

// Gaussian curvature K = Riem(L,N,L,N) / (g(L,N)^2 - g(L,L) g(N,N))
//                      = e^{-2 psi} lambda nu.
// Sign fixed once by the symbolic derivation (see docs/conventions.md) and
// shared with the reconstruction checks.
inline double gaussian_curvature(double psi, const SffPoint& s) {
  return std::exp(-2.0 * psi) * s.lambda * s.nu;
}

// Discrete residual of psi_rr - psi_tt = e^{-psi} * source on interior nodes.
// The returned field covers the interior lattice (nt-2) x (nr-2).
Field2D psi_wave_residual(const Field2D& psi, const Field2D& source);

}  // namespace minsurf
