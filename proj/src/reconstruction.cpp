#include "minsurf/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minsurf {

Vec3 mcross(const Vec3& a, const Vec3& b) {
  // covariant components eps_{dbc} a^b b^c, index raised with eta
  const double w0 = a[1] * b[2] - a[2] * b[1];
  const double w1 = a[2] * b[0] - a[0] * b[2];
  const double w2 = a[0] * b[1] - a[1] * b[0];
  return {-w0, w1, w2};
}

FrameNode seed_from_graph(const GraphData& g) {
  const SampledFunction1D d1 = derivative(g.phi0);
  const SampledFunction1D d2 = second_derivative(g.phi0);
  const SampledFunction1D e1 = derivative(g.phi1);
  const SlicePoint sp = convert_jet(d1[0], d2[0], g.phi1[0], e1[0]);
  const double epsi = std::exp(sp.psi0);
  const Vec3 et{1.0, 0.0, g.phi1[0]};
  const Vec3 ex{0.0, 1.0, d1[0]};
  FrameNode f;
  f.X = Vec3{0.0, g.phi0.grid.origin, g.phi0[0]};
  f.Xu = (et * sp.Nt + ex * sp.Nx) * epsi;
  f.Xv = (et * sp.Lt + ex * sp.Lx) * epsi;
  const double s = std::sqrt(sp.radicand);
  f.n = Vec3{g.phi1[0] / s, -d1[0] / s, 1.0 / s};
  return f;
}

FrameNode canonical_flat_seed(const GeometricData& gd) {
  const double a = std::sqrt(0.5 * std::exp(gd.psi0[0]));
  FrameNode f;
  f.X = Vec3{0.0, gd.grid().origin, 0.0};
  f.Xu = Vec3{a, a, 0.0};
  f.Xv = Vec3{-a, a, 0.0};
  f.n = Vec3{0.0, 0.0, 1.0};
  return f;
}

namespace {

struct FrameState {
  Vec3 X, Xu, Xv, n;
  FrameState operator+(const FrameState& o) const {
    return {X + o.X, Xu + o.Xu, Xv + o.Xv, n + o.n};
  }
  FrameState operator*(double s) const { return {X * s, Xu * s, Xv * s, n * s}; }
};

void check_seed(const FrameNode& f, double epsi0) {
  const double scale = std::max(1.0, epsi0);
  const double defects[] = {
      std::abs(mdot(f.Xu, f.Xu)), std::abs(mdot(f.Xv, f.Xv)),
      std::abs(mdot(f.Xu, f.Xv) - epsi0), std::abs(mdot(f.n, f.n) - 1.0),
      std::abs(mdot(f.n, f.Xu)), std::abs(mdot(f.n, f.Xv))};
  for (double d : defects)
    if (d > 1e-10 * scale)
      fail(ErrorKind::reconstruction,
           "integrate_slice_frame: seed violates the frame invariants (defect " +
               std::to_string(d) + ")");
}

}  // namespace

SliceFrame integrate_slice_frame(const GeometricData& gd, const FrameNode& seed) {
  const GridSpec1D& grid = gd.grid();
  check_seed(seed, std::exp(gd.psi0[0]));

  const SampledFunction1D psi0p = derivative(gd.psi0);
  auto rhs = [&](double r, const FrameState& y) {
    const double psi = eval(gd.psi0, r);
    const double dpsi = eval(psi0p, r);
    const double p1 = eval(gd.psi1, r);
    const double psi_u = dpsi + p1;
    const double psi_v = dpsi - p1;
    const double lam = eval(gd.lambda0, r);
    const double nu = eval(gd.nu0, r);
    FrameState d;
    d.X = (y.Xu + y.Xv) * 0.5;
    d.Xu = (y.Xu * psi_u + y.n * lam) * 0.5;
    d.Xv = (y.Xv * psi_v + y.n * nu) * 0.5;
    d.n = (y.Xv * lam + y.Xu * nu) * (-0.5 * std::exp(-psi));
    return d;
  };

  SliceFrame out;
  out.grid = grid;
  out.nodes.resize(grid.count);
  FrameState y{seed.X, seed.Xu, seed.Xv, seed.n};
  out.nodes[0] = FrameNode{y.X, y.Xu, y.Xv, y.n};
  const double h = grid.h;
  for (int k = 0; k + 1 < grid.count; ++k) {
    const double r = grid.x(k);
    const FrameState k1 = rhs(r, y);
    const FrameState k2 = rhs(r + 0.5 * h, y + k1 * (0.5 * h));
    const FrameState k3 = rhs(r + 0.5 * h, y + k2 * (0.5 * h));
    const FrameState k4 = rhs(r + h, y + k3 * h);
    y = y + (k1 + (k2 + k3) * 2.0 + k4) * (h / 6.0);
    out.nodes[k + 1] = FrameNode{y.X, y.Xu, y.Xv, y.n};
  }
  return out;
}

namespace {

int snap_index(double coord, const GridSpec1D& g, const char* what) {
  const double a = (coord - g.origin) / g.h;
  if (a < -1e-6 || a > g.count - 1 + 1e-6)
    fail(ErrorKind::invalid_input,
         std::string("assemble_embedding: region exceeds the frame extent (") + what + ")");
  return std::clamp(static_cast<int>(std::round(a)), 0, g.count - 1);
}

// 4-point Lagrange interpolation of a Vec3 sequence on a uniform grid.
Vec3 lagrange4(const std::vector<Vec3>& y, const GridSpec1D& g, double x) {
  const int n = g.count;
  double a = (x - g.origin) / g.h;
  a = std::clamp(a, 0.0, static_cast<double>(n - 1));
  const double rnd = std::round(a);
  if (std::abs(a - rnd) < 1e-11) return y[static_cast<int>(rnd)];
  if (n < 4) {
    const int i = std::min(static_cast<int>(a), n - 2);
    const double s = a - i;
    return y[i] * (1.0 - s) + y[i + 1] * s;
  }
  int k = std::clamp(static_cast<int>(std::floor(a)) - 1, 0, n - 4);
  const double s = a - k;
  const double w0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
  const double w1 = s * (s - 2.0) * (s - 3.0) / 2.0;
  const double w2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
  const double w3 = s * (s - 1.0) * (s - 2.0) / 6.0;
  return y[k] * w0 + y[k + 1] * w1 + y[k + 2] * w2 + y[k + 3] * w3;
}

// Cubic Hermite with prescribed slopes; linear extension beyond the grid.
Vec3 hermite(const std::vector<Vec3>& y, const std::vector<Vec3>& slope,
             const GridSpec1D& g, double x) {
  const int n = g.count;
  const double a = (x - g.origin) / g.h;
  if (a <= 0.0) return y[0] + slope[0] * (x - g.origin);
  if (a >= n - 1) return y[n - 1] + slope[n - 1] * (x - g.x(n - 1));
  const int i = std::min(static_cast<int>(a), n - 2);
  const double s = a - i;
  const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
  const double h10 = s * (1.0 - s) * (1.0 - s);
  const double h01 = s * s * (3.0 - 2.0 * s);
  const double h11 = s * s * (s - 1.0);
  return y[i] * h00 + slope[i] * (h10 * g.h) + y[i + 1] * h01 + slope[i + 1] * (h11 * g.h);
}

}  // namespace

Vec3 Embedding::normal(int iu, int iv) const {
  const Vec3 w = mcross(Xu[iu], Xv[iv]);
  const double ww = mdot(w, w);
  if (!(ww > 0.0))
    fail(ErrorKind::reconstruction, "Embedding::normal: degenerate tangent frame");
  return w * (1.0 / std::sqrt(ww));
}

Vec3 Embedding::A_at(double u) const { return hermite(A, Xu, ugrid, u); }
Vec3 Embedding::B_at(double v) const { return hermite(B, Xv, vgrid, v); }
Vec3 Embedding::Xu_at(double u) const { return lagrange4(Xu, ugrid, u); }
Vec3 Embedding::Xv_at(double v) const { return lagrange4(Xv, vgrid, v); }

Embedding assemble_embedding(const SliceFrame& frame, const Region& region) {
  const int n = frame.grid.count;
  const double du = 0.5 * frame.grid.h;
  const GridSpec1D diag(0.5 * frame.grid.origin, du, n);  // u = v = r/2 nodes

  if (!(region.u_lo <= region.u_hi) || !(region.v_lo <= region.v_hi))
    fail(ErrorKind::invalid_input, "assemble_embedding: empty region");
  const int iu0 = snap_index(region.u_lo, diag, "u_lo");
  const int iu1 = snap_index(region.u_hi, diag, "u_hi");
  const int iv0 = snap_index(region.v_lo, diag, "v_lo");
  const int iv1 = snap_index(region.v_hi, diag, "v_hi");

  // trapezoidal prefix integrals of the tangents along the diagonal
  std::vector<Vec3> Afull(n), Bfull(n);
  Afull[0] = frame.nodes[0].X;
  Bfull[0] = Vec3{};
  for (int k = 0; k + 1 < n; ++k) {
    Afull[k + 1] = Afull[k] + (frame.nodes[k].Xu + frame.nodes[k + 1].Xu) * (0.5 * du);
    Bfull[k + 1] = Bfull[k] + (frame.nodes[k].Xv + frame.nodes[k + 1].Xv) * (0.5 * du);
  }

  Embedding e;
  e.ugrid = GridSpec1D(diag.x(iu0), du, iu1 - iu0 + 1);
  e.vgrid = GridSpec1D(diag.x(iv0), du, iv1 - iv0 + 1);
  e.A.assign(Afull.begin() + iu0, Afull.begin() + iu1 + 1);
  e.B.assign(Bfull.begin() + iv0, Bfull.begin() + iv1 + 1);
  e.Xu.resize(e.ugrid.count);
  e.Xv.resize(e.vgrid.count);
  for (int k = 0; k < e.ugrid.count; ++k) e.Xu[k] = frame.nodes[iu0 + k].Xu;
  for (int k = 0; k < e.vgrid.count; ++k) e.Xv[k] = frame.nodes[iv0 + k].Xv;
  return e;
}

Embedding assemble_embedding(const SliceFrame& frame) {
  const double lo = 0.5 * frame.grid.origin;
  const double hi = 0.5 * frame.grid.xmax();
  return assemble_embedding(frame, Region{lo, hi, lo, hi});
}

bool Regraphed::all_valid() const {
  return std::all_of(valid.begin(), valid.end(), [](uint8_t v) { return v != 0; });
}

Regraphed regraph(const Embedding& e, const QueryLattice& q) {
  Regraphed out;
  out.phi = Field2D(q.t0, q.x0, q.dt, q.dx, q.nt, q.nx);
  out.valid.assign(static_cast<size_t>(q.nt) * q.nx, 0);
  const double ulo = e.ugrid.origin, uhi = e.ugrid.xmax();
  const double vlo = e.vgrid.origin, vhi = e.vgrid.xmax();
  const double slack = e.ugrid.h;

  for (int j = 0; j < q.nt; ++j) {
    const double t = q.t0 + j * q.dt;
    for (int i = 0; i < q.nx; ++i) {
      const double x = q.x0 + i * q.dx;
      double u = 0.5 * (x + t), v = 0.5 * (x - t);
      const double tol = 1e-12 * std::max({1.0, std::abs(t), std::abs(x)});
      bool ok = false;
      for (int it = 0; it < 50; ++it) {
        const Vec3 P = e.point_at(u, v);
        const double F0 = P[0] - t, F1 = P[1] - x;
        if (std::abs(F0) + std::abs(F1) <= tol) {
          ok = true;
          break;
        }
        const Vec3 Tu = e.Xu_at(u), Tv = e.Xv_at(v);
        const double det = Tu[0] * Tv[1] - Tv[0] * Tu[1];
        if (std::abs(det) < 1e-14) break;
        u -= (F0 * Tv[1] - F1 * Tv[0]) / det;
        v -= (-F0 * Tu[1] + F1 * Tu[0]) / det;
        u = std::clamp(u, ulo - slack, uhi + slack);
        v = std::clamp(v, vlo - slack, vhi + slack);
      }
      if (ok && u >= ulo - 1e-9 && u <= uhi + 1e-9 && v >= vlo - 1e-9 && v <= vhi + 1e-9) {
        out.phi.at(j, i) = e.point_at(u, v)[2];
        out.valid[static_cast<size_t>(j) * q.nx + i] = 1;
      }
    }
  }
  return out;
}

DiagnosticsReport embedding_checks(const Embedding& e, const Evolution& ev,
                                   const NullPair& np) {
  DiagnosticsReport rep;
  const int nu = e.ugrid.count, nv = e.vgrid.count;
  const double du = e.ugrid.h;

  double null_u = 0.0, null_v = 0.0;
  for (int i = 0; i < nu; ++i) null_u = std::max(null_u, std::abs(mdot(e.Xu[i], e.Xu[i])));
  for (int j = 0; j < nv; ++j) null_v = std::max(null_v, std::abs(mdot(e.Xv[j], e.Xv[j])));

  const double t_max = ev.psi.t(ev.psi.nt - 1);
  double metric_defect = 0.0, normal_defect = 0.0;
  double lam_defect = 0.0, nu_defect = 0.0, trace_defect = 0.0;
  for (int i = 0; i < nu; ++i) {
    const double u = e.ugrid.x(i);
    const bool interior_u = i > 0 && i + 1 < nu;
    Vec3 d2A{};
    if (interior_u)
      d2A = (e.A[i + 1] - e.A[i] * 2.0 + e.A[i - 1]) * (1.0 / (du * du));
    for (int j = 0; j < nv; ++j) {
      const double v = e.vgrid.x(j);
      const double euv = mdot(e.Xu[i], e.Xv[j]);
      const Vec3 w = mcross(e.Xu[i], e.Xv[j]);
      const Vec3 nsc = w * (1.0 / euv);
      normal_defect = std::max(normal_defect, std::abs(mdot(nsc, nsc) - 1.0));
      const Vec3 n = e.normal(i, j);

      const double t = u - v, r = u + v;
      if (t >= 0.0 && t <= t_max && ev.trusted.contains(t, r))
        metric_defect = std::max(metric_defect,
                                 std::abs(euv - std::exp(eval_bilinear(ev.psi, t, r))));
      if (interior_u)
        lam_defect = std::max(lam_defect, std::abs(mdot(d2A, n) - eval(np.Lambda, u)));
      if (j > 0 && j + 1 < nv) {
        const Vec3 d2B = (e.B[j + 1] - e.B[j] * 2.0 + e.B[j - 1]) * (1.0 / (du * du));
        nu_defect = std::max(nu_defect, std::abs(mdot(d2B, n) - eval(np.V, v)));
      }
      if (interior_u && j > 0 && j + 1 < nv) {
        // cross difference of X = A(u) + B(v); exactly zero by construction
        const Vec3 xuv = (e.point(i + 1, j + 1) - e.point(i + 1, j - 1) -
                          e.point(i - 1, j + 1) + e.point(i - 1, j - 1)) *
                         (1.0 / (4.0 * du * du));
        trace_defect = std::max(trace_defect, std::abs(2.0 / euv * mdot(xuv, n)));
      }
    }
  }
  rep.set("null_u_defect", null_u);
  rep.set("null_v_defect", null_v);
  rep.set("metric_vs_evolution", metric_defect);
  rep.set("normal_unit_defect", normal_defect);
  rep.set("lambda_recovered_defect", lam_defect);
  rep.set("nu_recovered_defect", nu_defect);
  rep.set("trace_k_defect", trace_defect);
  return rep;
}

}  // namespace minsurf
