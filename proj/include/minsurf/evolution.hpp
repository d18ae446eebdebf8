#pragma once

#include "minsurf/fields.hpp"
#include "minsurf/geometry.hpp"
#include "minsurf/initial_data.hpp"

namespace minsurf {

enum class Scheme { leapfrog, characteristic };

struct EvolveConfig {
  double r_min = -10.0;
  double r_max = 10.0;
  double h = 0.01;
  double cfl = 1.0;
  double t_final = 1.0;
  Scheme scheme = Scheme::leapfrog;
  double picard_tol = 1e-12;
  int picard_max_iters = 50;

  void validate() const {
    if (!(r_min < r_max)) fail(ErrorKind::usage, "EvolveConfig: r_min must be < r_max");
    if (!(h > 0)) fail(ErrorKind::usage, "EvolveConfig: h must be positive");
    if (!(t_final > 0)) fail(ErrorKind::usage, "EvolveConfig: t_final must be positive");
    if (!(cfl > 0) || cfl > 1.0) fail(ErrorKind::usage, "EvolveConfig: cfl must be in (0,1]");
    if (!(picard_tol > 0)) fail(ErrorKind::usage, "EvolveConfig: picard_tol must be positive");
  }
};

// Domain of determinacy of the initial interval [r_lo0, r_hi0], shrinking
// at `slope` per unit time (the numerical dependence speed, h/dt).
struct TrustedRegion {
  double r_lo0 = 0.0;
  double r_hi0 = 0.0;
  double slope = 1.0;

  double lo(double t) const { return r_lo0 + slope * t; }
  double hi(double t) const { return r_hi0 - slope * t; }
  bool contains(double t, double r, double tol = 1e-9) const {
    return r >= lo(t) - tol && r <= hi(t) + tol;
  }
};

// Pointwise evaluation of the transported curvature profiles. Lattice-aligned
// arguments hit samples exactly; other points use cubic interpolation with
// constant extrapolation outside the sampled range.
struct TransportedSource {
  SampledFunction1D lambda0;
  SampledFunction1D nu0;
  double lambda(double t, double r) const { return eval(lambda0, r + t); }
  double nu(double t, double r) const { return eval(nu0, r - t); }
  double operator()(double t, double r) const {
    const double l = lambda(t, r);
    if (l == 0.0) return 0.0;  // skip the second lookup on compact data
    return l * nu(t, r);
  }
};

struct Evolution {
  Field2D psi;        // psi on the full padded lattice
  NullPair profiles;  // exact transported Lambda(u), V(v)
  TransportedSource source;
  TrustedRegion trusted;
  double dt = 0.0;

  // Source field lambda(t,r) * nu(t,r) assembled on the psi lattice.
  Field2D source_field() const;
};

// Absolute bound distinguishing genuine divergence from overflow.
inline constexpr double kBlowupGuard = 50.0;

// Three-level explicit leapfrog for psi_tt = psi_rr - e^{-psi} lambda nu,
// first level seeded by a second-order Taylor step. The source is evaluated
// from the exact transported profiles. Boundary columns are frozen; only the
// trusted region is meaningful.
Evolution evolve_leapfrog(const GeometricData& gd, const EvolveConfig& cfg);

// Characteristic-rectangle (Goursat) marching: psi(P) = psi(A) + psi(B)
// - psi(C) + h^2 e^{-psi_bar} lambda nu (midpoint), with Picard iteration on
// the cell fixed point. Requires cfl = 1 so diamonds align with the lattice.
Evolution evolve_characteristic(const GeometricData& gd, const EvolveConfig& cfg);

// d'Alembert closed form, valid when the sampled product lambda0 * nu0 is
// identically zero (the profiles need not vanish individually).
class FreeWave {
 public:
  explicit FreeWave(const GeometricData& gd);
  double operator()(double t, double r) const;

 private:
  SampledFunction1D psi0_;
  PrefixIntegral psi1_int_;
};

}  // namespace minsurf
