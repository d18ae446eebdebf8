#include <doctest.h>

#include <cmath>

#include "minsurf/initial_data.hpp"
#include "minsurf/reconstruction.hpp"

using namespace minsurf;

namespace {

SampledFunction1D sampled(double (*f)(double), const GridSpec1D& g) {
  std::vector<double> v(g.count);
  for (int i = 0; i < g.count; ++i) v[i] = f(g.x(i));
  return SampledFunction1D(g, std::move(v));
}

double zero_fn(double) { return 0.0; }
double ln2_fn(double) { return std::log(2.0); }

GeometricData flat_data(const GridSpec1D& g) {
  return GeometricData(sampled(zero_fn, g), sampled(zero_fn, g),
                       sampled(ln2_fn, g), sampled(zero_fn, g));
}

double frame_defect(const FrameNode& f, double epsi) {
  double d = std::abs(mdot(f.Xu, f.Xu));
  d = std::max(d, std::abs(mdot(f.Xv, f.Xv)));
  d = std::max(d, std::abs(mdot(f.Xu, f.Xv) - epsi));
  d = std::max(d, std::abs(mdot(f.n, f.n) - 1.0));
  d = std::max(d, std::abs(mdot(f.n, f.Xu)));
  d = std::max(d, std::abs(mdot(f.n, f.Xv)));
  return d;
}

// proper orthochronous transforms of R^{1,2}
Vec3 boost(const Vec3& p, double eta) {
  return {std::cosh(eta) * p[0] + std::sinh(eta) * p[1],
          std::sinh(eta) * p[0] + std::cosh(eta) * p[1], p[2]};
}
Vec3 rotate(const Vec3& p, double th) {
  return {p[0], std::cos(th) * p[1] - std::sin(th) * p[2],
          std::sin(th) * p[1] + std::cos(th) * p[2]};
}

double gauss(double x) { return 0.1 * std::exp(-0.5 * x * x); }
double dgauss(double x) { return -0.1 * x * std::exp(-0.5 * x * x); }

}  // namespace

TEST_CASE("Minkowski cross product: orientation and orthogonality") {
  Vec3 xu{1.0, 1.0, 0.0}, xv{-1.0, 1.0, 0.0};
  Vec3 w = mcross(xu, xv);
  CHECK(w[0] == doctest::Approx(0.0));
  CHECK(w[1] == doctest::Approx(0.0));
  CHECK(w[2] == doctest::Approx(2.0));
  Vec3 a{0.3, -0.7, 0.2}, b{0.1, 0.4, -0.9};
  Vec3 c = mcross(a, b);
  CHECK(mdot(c, a) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(mdot(c, b) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("flat strip reconstructs the plane exactly") {
  GridSpec1D g(-4.0, 0.125, 65);
  GeometricData gd = flat_data(g);
  FrameNode seed = canonical_flat_seed(gd);
  CHECK(frame_defect(seed, 2.0) < 1e-14);
  SliceFrame frame = integrate_slice_frame(gd, seed);
  for (const FrameNode& f : frame.nodes) CHECK(frame_defect(f, 2.0) < 1e-12);

  Embedding e = assemble_embedding(frame);
  // X(u, v) = (u - v, u + v, 0)
  for (int iu = 0; iu < e.ugrid.count; iu += 7)
    for (int iv = 0; iv < e.vgrid.count; iv += 7) {
      const Vec3 X = e.point(iu, iv);
      CHECK(X[0] == doctest::Approx(e.ugrid.x(iu) - e.vgrid.x(iv)).epsilon(1e-12));
      CHECK(X[1] == doctest::Approx(e.ugrid.x(iu) + e.vgrid.x(iv)).epsilon(1e-12));
      CHECK(std::abs(X[2]) < 1e-12);
      Vec3 n = e.normal(iu, iv);
      CHECK(n[2] == doctest::Approx(1.0));
    }

  QueryLattice q{0.0, -1.0, 0.5, 0.25, 5, 9};
  Regraphed rg = regraph(e, q);
  CHECK(rg.all_valid());
  for (double y : rg.phi.v) CHECK(std::abs(y) < 1e-11);
}

TEST_CASE("graph seed at the flat origin equals the canonical seed") {
  GridSpec1D g(-2.0, 0.1, 41);
  GraphData zero(sampled(zero_fn, g), sampled(zero_fn, g));
  FrameNode a = seed_from_graph(zero);
  FrameNode b = canonical_flat_seed(graph_to_geometric(zero));
  for (int k = 0; k < 3; ++k) {
    CHECK(a.Xu[k] == doctest::Approx(b.Xu[k]).epsilon(1e-13));
    CHECK(a.Xv[k] == doctest::Approx(b.Xv[k]).epsilon(1e-13));
    CHECK(a.n[k] == doctest::Approx(b.n[k]).epsilon(1e-13));
    CHECK(a.X[k] == doctest::Approx(b.X[k]).epsilon(1e-13));
  }
}

TEST_CASE("invalid seeds are rejected with the reconstruction error kind") {
  GridSpec1D g(-2.0, 0.1, 41);
  GeometricData gd = flat_data(g);
  FrameNode bad = canonical_flat_seed(gd);
  bad.Xu[0] += 0.01;  // breaks the null invariant
  CHECK_THROWS_AS(integrate_slice_frame(gd, bad), Error);
  try {
    integrate_slice_frame(gd, bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::reconstruction);
    CHECK(e.exit_code() == 4);
  }
}

TEST_CASE("frame invariants propagate along curved data") {
  GridSpec1D g(-6.0, 1.0 / 64.0, 12 * 64 + 1);
  GraphData dat(sampled(gauss, g), sampled(dgauss, g));
  GeometricData gd = graph_to_geometric(dat);
  SliceFrame frame = integrate_slice_frame(gd, seed_from_graph(dat));
  for (int k = 0; k < frame.grid.count; k += 16) {
    const double epsi = std::exp(eval(gd.psi0, frame.grid.x(k)));
    // coefficients are linearly interpolated at half-steps, so the frame
    // integration drifts at O(h^2)
    CHECK(frame_defect(frame.nodes[k], epsi) < 5e-6);
  }
}

TEST_CASE("Poincare covariance of the reconstruction") {
  GridSpec1D g(-4.0, 1.0 / 32.0, 8 * 32 + 1);
  GraphData dat(sampled(gauss, g), sampled(dgauss, g));
  GeometricData gd = graph_to_geometric(dat);
  FrameNode seed = seed_from_graph(dat);

  SliceFrame base = integrate_slice_frame(gd, seed);

  // the frame ODE has scalar coefficients, so a Lorentz map of the seed must
  // map the whole frame: X'(r) = T X(r) exactly (up to rounding)
  for (int variant = 0; variant < 2; ++variant) {
    auto T = [&](const Vec3& p) { return variant == 0 ? boost(p, 0.3) : rotate(p, 0.7); };
    FrameNode tseed{T(seed.X), T(seed.Xu), T(seed.Xv), T(seed.n)};
    SliceFrame moved = integrate_slice_frame(gd, tseed);
    double sup = 0.0;
    for (int k = 0; k < base.grid.count; ++k)
      for (int c = 0; c < 3; ++c) {
        sup = std::max(sup, std::abs(moved.nodes[k].X[c] - T(base.nodes[k].X)[c]));
        sup = std::max(sup, std::abs(moved.nodes[k].n[c] - T(base.nodes[k].n)[c]));
      }
    CHECK(sup < 1e-11);
  }

  // mcross is equivariant under proper orthochronous maps
  Vec3 a{0.2, 0.9, -0.4}, b{-0.1, 0.3, 0.8};
  Vec3 lhs = mcross(boost(a, 0.5), boost(b, 0.5));
  Vec3 rhs = boost(mcross(a, b), 0.5);
  for (int c = 0; c < 3; ++c) CHECK(lhs[c] == doctest::Approx(rhs[c]).epsilon(1e-12));
}

TEST_CASE("regraph marks unreachable queries invalid") {
  GridSpec1D g(-2.0, 0.125, 33);
  SliceFrame frame = integrate_slice_frame(flat_data(g), canonical_flat_seed(flat_data(g)));
  Embedding e = assemble_embedding(frame);
  QueryLattice q{0.0, 50.0, 1.0, 1.0, 1, 3};  // far outside the covered square
  Regraphed rg = regraph(e, q);
  CHECK(!rg.all_valid());
}

TEST_CASE("assemble_embedding validates the requested region") {
  GridSpec1D g(-2.0, 0.125, 33);
  SliceFrame frame = integrate_slice_frame(flat_data(g), canonical_flat_seed(flat_data(g)));
  CHECK_THROWS_AS(assemble_embedding(frame, Region{-5.0, 1.0, -1.0, 1.0}), Error);
  Embedding part = assemble_embedding(frame, Region{-0.5, 0.5, -0.25, 0.75});
  CHECK(part.ugrid.origin == doctest::Approx(-0.5));
  CHECK(part.ugrid.xmax() == doctest::Approx(0.5));
  CHECK(part.vgrid.origin == doctest::Approx(-0.25));
}
