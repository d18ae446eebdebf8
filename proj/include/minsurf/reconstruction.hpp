#pragma once

#include <vector>

#include "minsurf/diagnostics.hpp"
#include "minsurf/evolution.hpp"
#include "minsurf/initial_data.hpp"

namespace minsurf {

// Vector in R^{1,2} with inner product <a,b> = -a0 b0 + a1 b1 + a2 b2.
struct Vec3 {
  double c[3] = {0.0, 0.0, 0.0};

  double operator[](int i) const { return c[i]; }
  double& operator[](int i) { return c[i]; }
  Vec3 operator+(const Vec3& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
  Vec3 operator-(const Vec3& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
  Vec3 operator*(double s) const { return {c[0] * s, c[1] * s, c[2] * s}; }
};

inline double mdot(const Vec3& a, const Vec3& b) {
  return -a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

// Minkowski cross product: the vector orthogonal to both arguments, oriented
// so that the flat frame X_u = (1,1,0), X_v = (-1,1,0) yields (0,0,2).
Vec3 mcross(const Vec3& a, const Vec3& b);

struct FrameNode {
  Vec3 X, Xu, Xv, n;
};

// Frame along the initial slice u = v = r/2, indexed by the r-grid of the
// geometric data.
struct SliceFrame {
  GridSpec1D grid;  // over r
  std::vector<FrameNode> nodes;
};

// Seed frame at the leftmost node built from graph data (matches the
// graphical embedding (t, x, phi)).
FrameNode seed_from_graph(const GraphData& g);

// Canonical flat-frame seed for pure geometric data: the solution of the
// frame invariants with n = (0,0,1) and X on the x-axis.
FrameNode canonical_flat_seed(const GeometricData& gd);

// Fourth-order integration of the frame ODEs along the slice:
//   X'  = (X_u + X_v)/2
//   X_u' = (psi_u X_u + lambda n)/2
//   X_v' = (psi_v X_v + nu n)/2
//   n'  = -e^{-psi} (lambda X_v + nu X_u)/2
// with psi_u = psi0' + psi1 and psi_v = psi0' - psi1.
SliceFrame integrate_slice_frame(const GeometricData& gd, const FrameNode& seed);

struct Region {
  double u_lo, u_hi, v_lo, v_hi;
};

// Sampled immersion in additive form X(u,v) = A(u) + B(v) on a (u,v)-grid of
// spacing h/2 (trapezoidal line integrals of the slice tangents).
struct Embedding {
  GridSpec1D ugrid, vgrid;
  std::vector<Vec3> A, B;    // X(u,v) = A[iu] + B[iv]
  std::vector<Vec3> Xu, Xv;  // tangents at the u- and v-nodes

  Vec3 point(int iu, int iv) const { return A[iu] + B[iv]; }
  Vec3 normal(int iu, int iv) const;  // unit normal from the tangent frame
  // Hermite/Lagrange evaluation at arbitrary coordinates.
  Vec3 A_at(double u) const;
  Vec3 B_at(double v) const;
  Vec3 Xu_at(double u) const;
  Vec3 Xv_at(double v) const;
  Vec3 point_at(double u, double v) const { return A_at(u) + B_at(v); }
};

Embedding assemble_embedding(const SliceFrame& frame, const Region& region);
Embedding assemble_embedding(const SliceFrame& frame);  // full square

struct QueryLattice {
  double t0, x0, dt, dx;
  int nt, nx;
};

struct Regraphed {
  Field2D phi;                 // height over the (t,x) query lattice
  std::vector<uint8_t> valid;  // per node; 0 where the cell inversion failed
  bool all_valid() const;
};

// Invert the parametrization back to graph form: for each query (t,x) solve
// X^0(u,v) = t, X^1(u,v) = x by Newton iteration and return X^2.
Regraphed regraph(const Embedding& e, const QueryLattice& q);

// Sup-norms of the embedding defects: null tangents, <X_u,X_v> - e^psi
// against the evolved psi, normal normalization, recovered lambda/nu vs the
// transported profiles, and the recovered trace of k.
DiagnosticsReport embedding_checks(const Embedding& e, const Evolution& ev,
                                   const NullPair& np);

}  // namespace minsurf
