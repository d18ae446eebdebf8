#include "minsurf/initial_data.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace minsurf {

TimelikeCheck validate_timelike(const GraphData& g) {
  SampledFunction1D dphi0 = derivative(g.phi0);
  TimelikeCheck c;
  c.min_radicand = 1e300;
  for (int i = 0; i < g.phi0.size(); ++i) {
    const double q = 1.0 - g.phi1[i] * g.phi1[i] + dphi0[i] * dphi0[i];
    if (q < c.min_radicand) {
      c.min_radicand = q;
      c.argmin = i;
    }
  }
  c.ok = c.min_radicand > 0.0;
  return c;
}

namespace {

using Mat2 = std::array<std::array<double, 2>, 2>;
using Vec2 = std::array<double, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

double quad(const Vec2& x, const Mat2& m, const Vec2& y) {
  return x[0] * (m[0][0] * y[0] + m[0][1] * y[1]) +
         x[1] * (m[1][0] * y[0] + m[1][1] * y[1]);
}

}  // namespace

SlicePoint convert_jet(double phi0p, double phi0pp, double phi1, double phi1p) {
  const double P = phi1;      // phi_t
  const double X = phi0p;     // phi_x
  const double ptx = phi1p;
  const double pxx = phi0pp;
  const double W = 1.0 + X * X;
  const double Q = 1.0 - P * P + X * X;
  if (!(Q > 0.0))
    fail(ErrorKind::not_timelike, "convert_jet: surface not timelike (radicand <= 0)");
  const double s = std::sqrt(Q);
  const double ptt = (2.0 * P * X * ptx + (1.0 - P * P) * pxx) / W;

  SlicePoint out{};
  out.radicand = Q;
  out.psi0 = std::log(2.0 * W);
  const double epsi = 2.0 * W;

  // Null frame L = grad u, N = grad v under the slice gauge u = v = x/2.
  out.Lt = -1.0 / (2.0 * s);
  out.Lx = (s + P * X) / (2.0 * s * W);
  out.Nt = 1.0 / (2.0 * s);
  out.Nx = (s - P * X) / (2.0 * s * W);

  // k components (k_{mu nu} = phi_{,mu nu} / sqrt(Q) in graph coordinates).
  const double kNN = (ptt * out.Nt * out.Nt + 2.0 * ptx * out.Nt * out.Nx + pxx * out.Nx * out.Nx) / s;
  const double kLL = (ptt * out.Lt * out.Lt + 2.0 * ptx * out.Lt * out.Lx + pxx * out.Lx * out.Lx) / s;
  out.lambda0 = epsi * epsi * kNN;
  out.nu0 = epsi * epsi * kLL;

  // Induced metric and its slice derivatives.
  const Mat2 g{{{-1.0 + P * P, P * X}, {P * X, W}}};
  const Mat2 gi{{{-W / Q, P * X / Q}, {P * X / Q, (1.0 - P * P) / Q}}};
  const Mat2 dg_t{{{2.0 * P * ptt, ptt * X + P * ptx}, {ptt * X + P * ptx, 2.0 * X * ptx}}};
  const Mat2 dg_x{{{2.0 * P * ptx, ptx * X + P * pxx}, {ptx * X + P * pxx, 2.0 * X * pxx}}};
  (void)g;

  // Christoffels of the induced metric on the slice.
  const std::array<Mat2, 2> dg{dg_t, dg_x};
  double Gam[2][2][2];
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double sum = 0.0;
        for (int d = 0; d < 2; ++d)
          sum += gi[c][d] * (dg[a][d][b] + dg[b][d][a] - dg[d][a][b]);
        Gam[c][a][b] = 0.5 * sum;
      }

  // Gradients and second derivatives of the eikonal functions on the slice.
  const double ut = (P * X + s) / (2.0 * W);
  const double vt = (P * X - s) / (2.0 * W);
  const Vec2 du{ut, 0.5};
  const Vec2 dv{vt, 0.5};
  const double Qp = -2.0 * P * ptx + 2.0 * X * pxx;
  const double sp = Qp / (2.0 * s);
  const double Wp = 2.0 * X * pxx;
  const double utx = ((ptx * X + P * pxx + sp) - (P * X + s) * Wp / W) / (2.0 * W);
  const double vtx = ((ptx * X + P * pxx - sp) - (P * X - s) * Wp / W) / (2.0 * W);

  // u_tt from the t-derivative of the eikonal constraint g^{ab} u_a u_b = 0.
  Mat2 dginv_t = mul(mul(gi, dg_t), gi);
  for (auto& row : dginv_t)
    for (auto& e : row) e = -e;
  const double utt = (-quad(du, dginv_t, du) - 2.0 * out.Lx * utx) / (2.0 * out.Lt);
  const double vtt = (-quad(dv, dginv_t, dv) - 2.0 * out.Nx * vtx) / (2.0 * out.Nt);

  // Hessians: Hess f_{ab} = f_{,ab} - Gamma^c_{ab} f_{,c}.
  auto hess = [&](double ftt, double ftx, const Vec2& grad) {
    Mat2 H{};
    const double f2[2][2] = {{ftt, ftx}, {ftx, 0.0}};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        H[a][b] = f2[a][b] - Gam[0][a][b] * grad[0] - Gam[1][a][b] * grad[1];
    return H;
  };
  const Mat2 Hu = hess(utt, utx, du);
  const Mat2 Hv = hess(vtt, vtx, dv);
  const Vec2 Lv{out.Lt, out.Lx};
  const Vec2 Nv{out.Nt, out.Nx};

  // N(e^{-psi}) = Hess u(N,N) and the mirrored relation give the null
  // derivatives of the conformal factor on the slice.
  out.psi_u = -epsi * epsi * quad(Nv, Hu, Nv);
  out.psi_v = -epsi * epsi * quad(Lv, Hv, Lv);
  out.psi1 = 0.5 * (out.psi_u - out.psi_v);
  return out;
}

GeometricData graph_to_geometric(const GraphData& g) {
  if (g.phi0.size() < 5)
    fail(ErrorKind::invalid_input, "graph_to_geometric: need at least 5 nodes");
  TimelikeCheck tc = validate_timelike(g);
  if (!tc.ok) {
    std::ostringstream ss;
    ss << "surface not timelike: radicand " << tc.min_radicand
       << " at x = " << g.phi0.grid.x(tc.argmin) << " (node " << tc.argmin << ")";
    fail(ErrorKind::not_timelike, ss.str());
  }
  const SampledFunction1D d1 = derivative(g.phi0);
  const SampledFunction1D d2 = second_derivative(g.phi0);
  const SampledFunction1D e1 = derivative(g.phi1);
  const int n = g.phi0.size();
  std::vector<double> lam(n), nu(n), p0(n), p1(n);
  for (int i = 0; i < n; ++i) {
    SlicePoint sp = convert_jet(d1[i], d2[i], g.phi1[i], e1[i]);
    lam[i] = sp.lambda0;
    nu[i] = sp.nu0;
    p0[i] = sp.psi0;
    p1[i] = sp.psi1;
  }
  const GridSpec1D grid = g.phi0.grid;
  return GeometricData(SampledFunction1D(grid, std::move(lam)),
                       SampledFunction1D(grid, std::move(nu)),
                       SampledFunction1D(grid, std::move(p0)),
                       SampledFunction1D(grid, std::move(p1)));
}

NullPair transport_profiles(const GeometricData& gd) {
  const GridSpec1D& g = gd.grid();
  GridSpec1D half(0.5 * g.origin, 0.5 * g.h, g.count);
  return NullPair{SampledFunction1D(half, gd.lambda0.values),
                  SampledFunction1D(half, gd.nu0.values)};
}

}  // namespace minsurf
