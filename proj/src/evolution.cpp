#include "minsurf/evolution.hpp"

#include <cmath>
#include <sstream>

namespace minsurf {
namespace {

int time_levels(double t_final, double dt) {
  return static_cast<int>(std::ceil(t_final / dt - 1e-9)) + 1;
}

void check_guard(const Field2D& psi, int level, const TrustedRegion& tr) {
  const double t = psi.t(level);
  for (int i = 0; i < psi.nr; ++i) {
    if (!tr.contains(t, psi.r(i))) continue;
    const double val = psi.at(level, i);
    if (!(std::abs(val) <= kBlowupGuard)) {
      std::ostringstream ss;
      ss << "blow-up suspected: |psi| = " << std::abs(val) << " > " << kBlowupGuard
         << " at t = " << t << ", r = " << psi.r(i);
      fail(ErrorKind::solver, ss.str());
    }
  }
}

// Taylor seed for level 1: psi0 + dt psi1 + dt^2/2 (psi0'' - e^{-psi0} lam0 nu0).
void seed_first_level(Field2D& psi, const GeometricData& gd, double dt) {
  const SampledFunction1D p0pp = second_derivative(gd.psi0);
  for (int i = 0; i < psi.nr; ++i) {
    const double src = gd.lambda0[i] * gd.nu0[i];
    psi.at(1, i) = gd.psi0[i] + dt * gd.psi1[i] +
                   0.5 * dt * dt * (p0pp[i] - std::exp(-gd.psi0[i]) * src);
  }
}

Evolution make_evolution(const GeometricData& gd, double dt, int nt) {
  Evolution ev;
  const GridSpec1D& g = gd.grid();
  ev.psi = Field2D(0.0, g.origin, dt, g.h, nt, g.count);
  ev.profiles = transport_profiles(gd);
  ev.source = TransportedSource{gd.lambda0, gd.nu0};
  ev.trusted = TrustedRegion{g.origin, g.xmax(), g.h / dt};
  ev.dt = dt;
  for (int i = 0; i < g.count; ++i) ev.psi.at(0, i) = gd.psi0[i];
  return ev;
}

}  // namespace

Field2D Evolution::source_field() const {
  Field2D s(psi.t0, psi.r0, psi.dt, psi.dr, psi.nt, psi.nr);
  for (int j = 0; j < psi.nt; ++j)
    for (int i = 0; i < psi.nr; ++i)
      s.at(j, i) = source(psi.t(j), psi.r(i));
  return s;
}

Evolution evolve_leapfrog(const GeometricData& gd, const EvolveConfig& cfg) {
  cfg.validate();
  const GridSpec1D& g = gd.grid();
  const double h = g.h;
  const double dt = cfg.cfl * h;
  const int nt = time_levels(cfg.t_final, dt);
  if (nt < 2) fail(ErrorKind::usage, "evolve_leapfrog: t_final shorter than one step");

  Evolution ev = make_evolution(gd, dt, nt);
  Field2D& psi = ev.psi;
  seed_first_level(psi, gd, dt);
  check_guard(psi, 1, ev.trusted);

  const double mu2 = (dt * dt) / (h * h);
  for (int j = 1; j + 1 < nt; ++j) {
    const double t = psi.t(j);
    for (int i = 1; i + 1 < psi.nr; ++i) {
      const double lap = psi.at(j, i + 1) - 2.0 * psi.at(j, i) + psi.at(j, i - 1);
      const double src = ev.source(t, psi.r(i));
      psi.at(j + 1, i) = 2.0 * psi.at(j, i) - psi.at(j - 1, i) + mu2 * lap -
                         (src == 0.0 ? 0.0 : dt * dt * std::exp(-psi.at(j, i)) * src);
    }
    psi.at(j + 1, 0) = psi.at(j, 0);
    psi.at(j + 1, psi.nr - 1) = psi.at(j, psi.nr - 1);
    check_guard(psi, j + 1, ev.trusted);
  }
  return ev;
}

Evolution evolve_characteristic(const GeometricData& gd, const EvolveConfig& cfg) {
  cfg.validate();
  if (std::abs(cfg.cfl - 1.0) > 1e-12)
    fail(ErrorKind::usage, "evolve_characteristic: diamond marching requires cfl = 1");
  const GridSpec1D& g = gd.grid();
  const double h = g.h;
  const double dt = h;
  const int nt = time_levels(cfg.t_final, dt);
  if (nt < 2) fail(ErrorKind::usage, "evolve_characteristic: t_final shorter than one step");

  Evolution ev = make_evolution(gd, dt, nt);
  Field2D& psi = ev.psi;
  seed_first_level(psi, gd, dt);
  check_guard(psi, 1, ev.trusted);

  // Signed cell integral: with corners A/B at time t and C/P below/above,
  // psi_P + psi_C - psi_A - psi_B = -integral of psi_uv over the diamond.
  const double area = -h * h;
  for (int j = 1; j + 1 < nt; ++j) {
    const double t = psi.t(j);
    for (int i = 1; i + 1 < psi.nr; ++i) {
      const double base = psi.at(j, i - 1) + psi.at(j, i + 1) - psi.at(j - 1, i);
      const double corner_sum = psi.at(j, i - 1) + psi.at(j, i + 1) + psi.at(j - 1, i);
      const double src = ev.source(t, psi.r(i));
      if (src == 0.0) {  // source-free cells close in one step
        psi.at(j + 1, i) = base;
        continue;
      }
      double p = base;  // Picard on the cell fixed point
      bool converged = false;
      for (int k = 0; k < cfg.picard_max_iters; ++k) {
        const double psi_bar = 0.25 * (corner_sum + p);
        const double next = base + area * std::exp(-psi_bar) * src;
        const double delta = std::abs(next - p);
        p = next;
        if (delta <= cfg.picard_tol * std::max(1.0, std::abs(p))) {
          converged = true;
          break;
        }
      }
      if (!converged) {
        std::ostringstream ss;
        ss << "Picard iteration did not converge in " << cfg.picard_max_iters
           << " iterations at cell t = " << t << ", r = " << psi.r(i)
           << " (last residual vs tol " << cfg.picard_tol << ")";
        fail(ErrorKind::solver, ss.str());
      }
      psi.at(j + 1, i) = p;
    }
    psi.at(j + 1, 0) = psi.at(j, 0);
    psi.at(j + 1, psi.nr - 1) = psi.at(j, psi.nr - 1);
    check_guard(psi, j + 1, ev.trusted);
  }
  return ev;
}

FreeWave::FreeWave(const GeometricData& gd)
    : psi0_(gd.psi0), psi1_int_(gd.psi1) {
  for (int i = 0; i < gd.lambda0.size(); ++i)
    if (gd.lambda0[i] * gd.nu0[i] != 0.0)
      fail(ErrorKind::invalid_input,
           "FreeWave: sampled product lambda0 * nu0 is not identically zero");
}

double FreeWave::operator()(double t, double r) const {
  return 0.5 * (eval(psi0_, r + t) + eval(psi0_, r - t)) +
         0.5 * (psi1_int_(r + t) - psi1_int_(r - t));
}

}  // namespace minsurf
