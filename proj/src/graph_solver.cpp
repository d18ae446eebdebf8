#include "minsurf/graph_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minsurf {
namespace {

constexpr double kRadicandFloor = 1e-6;

[[noreturn]] void breakdown(double q, double t, double x) {
  std::ostringstream ss;
  ss << "timelike breakdown: radicand " << q << " below floor " << kRadicandFloor
     << " at t = " << t << ", x = " << x;
  fail(ErrorKind::not_timelike, ss.str());
}

}  // namespace

double quasilinear_form(const Jet2& j) {
  const double q = 1.0 - j.phi_t * j.phi_t + j.phi_x * j.phi_x;
  if (!(q > 0.0))
    fail(ErrorKind::not_timelike, "quasilinear_form: jet not timelike");
  return (1.0 + j.phi_x * j.phi_x) * j.phi_tt -
         2.0 * j.phi_t * j.phi_x * j.phi_tx -
         (1.0 - j.phi_t * j.phi_t) * j.phi_xx;
}

double characteristic_speed(double phi_t, double phi_x) {
  const double q = 1.0 - phi_t * phi_t + phi_x * phi_x;
  if (!(q > 0.0)) fail(ErrorKind::not_timelike, "characteristic_speed: jet not timelike");
  const double s = std::sqrt(q);
  const double w = 1.0 + phi_x * phi_x;
  return std::max(std::abs((phi_t * phi_x + s) / w), std::abs((phi_t * phi_x - s) / w));
}

GraphEvolution evolve_graph(const GraphData& g, const EvolveConfig& cfg) {
  cfg.validate();
  const GridSpec1D& grid = g.phi0.grid;
  const double h = grid.h;
  const int n = grid.count;

  TimelikeCheck tc = validate_timelike(g);
  if (!tc.ok) {
    std::ostringstream ss;
    ss << "surface not timelike: radicand " << tc.min_radicand
       << " at x = " << grid.x(tc.argmin);
    fail(ErrorKind::not_timelike, ss.str());
  }

  // dt from the worst characteristic speed at t = 0, held fixed.
  const SampledFunction1D d1 = derivative(g.phi0);
  double cmax0 = 0.0;
  for (int i = 0; i < n; ++i)
    cmax0 = std::max(cmax0, characteristic_speed(g.phi1[i], d1[i]));
  cmax0 = std::max(cmax0, 1e-12);
  const double dt = cfg.cfl * h / std::max(1.0, cmax0);
  const int nt = static_cast<int>(std::ceil(cfg.t_final / dt - 1e-9)) + 1;
  if (nt < 3) fail(ErrorKind::usage, "evolve_graph: t_final must cover at least two steps");

  GraphEvolution ge;
  ge.dt = dt;
  ge.phi = Field2D(0.0, grid.origin, dt, h, nt, n);
  ge.phi_t = Field2D(0.0, grid.origin, dt, h, nt, n);
  ge.trusted = TrustedRegion{grid.origin, grid.xmax(), h / dt};

  Field2D& phi = ge.phi;
  Field2D& pt = ge.phi_t;
  for (int i = 0; i < n; ++i) {
    phi.at(0, i) = g.phi0[i];
    pt.at(0, i) = g.phi1[i];
  }
  // Taylor seed with phi_tt eliminated through the equation.
  const SampledFunction1D d2 = second_derivative(g.phi0);
  const SampledFunction1D e1 = derivative(g.phi1);
  for (int i = 0; i < n; ++i) {
    const double W = 1.0 + d1[i] * d1[i];
    const double ptt = (2.0 * g.phi1[i] * d1[i] * e1[i] + (1.0 - g.phi1[i] * g.phi1[i]) * d2[i]) / W;
    phi.at(1, i) = g.phi0[i] + dt * g.phi1[i] + 0.5 * dt * dt * ptt;
  }

  std::vector<double> phit(n), phitx(n), next(n), prev_next(n);
  for (int j = 1; j + 1 < nt; ++j) {
    const double t = phi.t(j);
    // spatial derivatives at the current level (interior only is used)
    std::vector<double> phix(n, 0.0), phixx(n, 0.0);
    for (int i = 1; i + 1 < n; ++i) {
      phix[i] = (phi.at(j, i + 1) - phi.at(j, i - 1)) / (2.0 * h);
      phixx[i] = (phi.at(j, i + 1) - 2.0 * phi.at(j, i) + phi.at(j, i - 1)) / (h * h);
    }
    // fixed point closing the centered phi_t = (phi^{n+1} - phi^{n-1})/(2 dt)
    for (int i = 0; i < n; ++i) {
      phit[i] = (phi.at(j, i) - phi.at(j - 1, i)) / dt;  // lagged first guess
      next[i] = phi.at(j, i);
    }
    bool converged = false;
    // contraction factor scales like cfl |phi_t phi_x| / (1 + phi_x^2); steep
    // but still timelike data can need ~50 sweeps to reach 1e-13
    for (int iter = 0; iter < 100 && !converged; ++iter) {
      for (int i = 1; i + 1 < n; ++i)
        phitx[i] = (phit[i + 1] - phit[i - 1]) / (2.0 * h);
      prev_next.swap(next);
      for (int i = 1; i + 1 < n; ++i) {
        const double W = 1.0 + phix[i] * phix[i];
        const double F = (2.0 * phit[i] * phix[i] * phitx[i] +
                          (1.0 - phit[i] * phit[i]) * phixx[i]) / W;
        next[i] = 2.0 * phi.at(j, i) - phi.at(j - 1, i) + dt * dt * F;
      }
      // boundary columns continue linearly in t (exact for affine data,
      // identical to freezing when the boundary is constant)
      next[0] = 2.0 * phi.at(j, 0) - phi.at(j - 1, 0);
      next[n - 1] = 2.0 * phi.at(j, n - 1) - phi.at(j - 1, n - 1);
      double delta = 0.0;
      for (int i = 1; i + 1 < n; ++i) {
        delta = std::max(delta, std::abs(next[i] - prev_next[i]));
        phit[i] = (next[i] - phi.at(j - 1, i)) / (2.0 * dt);
      }
      converged = iter > 0 && delta <= 1e-13 * std::max(1.0, norm_linf(g.phi0));
    }
    if (!converged)
      fail(ErrorKind::solver, "evolve_graph: phi_t fixed point stalled at t = " + std::to_string(t));
    for (int i = 0; i < n; ++i) {
      phi.at(j + 1, i) = next[i];
      pt.at(j, i) = (j == 0) ? g.phi1[i] : (phi.at(j + 1, i) - phi.at(j - 1, i)) / (2.0 * dt);
    }
    // radicand floor + CFL budget on trusted nodes
    const double tn = phi.t(j);
    for (int i = 1; i + 1 < n; ++i) {
      if (!ge.trusted.contains(tn, phi.r(i))) continue;
      const double q = 1.0 - phit[i] * phit[i] + phix[i] * phix[i];
      if (q < kRadicandFloor) breakdown(q, tn, phi.r(i));
      if (characteristic_speed(phit[i], phix[i]) * dt / h > 1.0 + 1e-9)
        fail(ErrorKind::solver, "evolve_graph: characteristic speeds exceed the CFL budget at t = " +
                                    std::to_string(tn));
    }
  }
  // last level phi_t by second-order backward difference
  for (int i = 0; i < n; ++i)
    pt.at(nt - 1, i) = (1.5 * phi.at(nt - 1, i) - 2.0 * phi.at(nt - 2, i) +
                        0.5 * phi.at(nt - 3, i)) / dt;
  return ge;
}

}  // namespace minsurf
