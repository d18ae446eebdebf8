#include <doctest.h>

#include <cmath>

#include "minsurf/graph_solver.hpp"

using namespace minsurf;

namespace {

SampledFunction1D sampled(double (*f)(double), const GridSpec1D& g) {
  std::vector<double> v(g.count);
  for (int i = 0; i < g.count; ++i) v[i] = f(g.x(i));
  return SampledFunction1D(g, std::move(v));
}

double fwave(double x) { return 0.1 * std::exp(-0.5 * x * x); }
double dfwave(double x) { return -0.1 * x * std::exp(-0.5 * x * x); }

}  // namespace

TEST_CASE("quasilinear form on exact jets") {
  // any phi = f(x - t) solves the equation: jets (p_t, p_x, p_tt, p_tx, p_xx)
  // = (-f', f', f'', -f'', f'')
  for (double fp : {-0.3, 0.2})
    for (double fpp : {-0.5, 0.4}) {
      Jet2 j{-fp, fp, fpp, -fpp, fpp};
      CHECK(quasilinear_form(j) == doctest::Approx(0.0).epsilon(1e-14));
    }
  Jet2 bad{1.2, 0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(quasilinear_form(bad), Error);
}

TEST_CASE("characteristic speeds") {
  CHECK(characteristic_speed(0.0, 0.0) == doctest::Approx(1.0));
  // steep static data slow the characteristics down: c = 1/sqrt(1 + phi_x^2)
  CHECK(characteristic_speed(0.0, 1.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(characteristic_speed(1.0, 0.0), Error);
}

TEST_CASE("affine solutions are reproduced to rounding") {
  GridSpec1D g(-2.0, 0.05, 81);
  const double al = 0.2, be = 0.3;
  std::vector<double> p0(g.count), p1(g.count, be);
  for (int i = 0; i < g.count; ++i) p0[i] = al * g.x(i) + 0.1;
  EvolveConfig c;
  c.t_final = 1.0;
  GraphEvolution ev = evolve_graph(
      GraphData(SampledFunction1D(g, std::move(p0)), SampledFunction1D(g, std::move(p1))), c);
  const int j = ev.phi.nt - 1;
  const double t = ev.phi.t(j);
  for (int i = 0; i < ev.phi.nr; ++i) {
    if (!ev.trusted.contains(t, ev.phi.r(i))) continue;
    CHECK(ev.phi.at(j, i) ==
          doctest::Approx(al * ev.phi.r(i) + be * t + 0.1).epsilon(1e-12));
    CHECK(ev.phi_t.at(j, i) == doctest::Approx(be).epsilon(1e-10));
  }
}

TEST_CASE("travelling wave is tracked to second order") {
  GridSpec1D g(-7.0, 1.0 / 64.0, 14 * 64 + 1);
  GraphData dat(sampled(fwave, g), sampled([](double x) { return -dfwave(x); }, g));
  EvolveConfig c;
  c.t_final = 2.0;
  c.cfl = 0.9;
  GraphEvolution ev = evolve_graph(dat, c);
  const int j = ev.phi.nt - 1;
  const double t = ev.phi.t(j);
  double err = 0.0;
  for (int i = 0; i < ev.phi.nr; ++i) {
    if (!ev.trusted.contains(t, ev.phi.r(i))) continue;
    err = std::max(err, std::abs(ev.phi.at(j, i) - fwave(ev.phi.r(i) - t)));
  }
  CHECK(err < 5e-5);
}

TEST_CASE("time reversal recovers the initial data at O(h^2)") {
  GridSpec1D g(-6.0, 1.0 / 64.0, 12 * 64 + 1);
  GraphData dat(sampled(fwave, g), sampled(dfwave, g));
  EvolveConfig c;
  c.t_final = 1.0;
  c.cfl = 0.9;
  GraphEvolution fwd = evolve_graph(dat, c);
  const int j = fwd.phi.nt - 1;
  const double t = fwd.phi.t(j);
  std::vector<double> p0(g.count), p1(g.count);
  for (int i = 0; i < g.count; ++i) {
    p0[i] = fwd.phi.at(j, i);
    p1[i] = -fwd.phi_t.at(j, i);
  }
  GraphEvolution back = evolve_graph(
      GraphData(SampledFunction1D(g, std::move(p0)), SampledFunction1D(g, std::move(p1))), c);
  const int k = back.phi.nt - 1;
  double err = 0.0;
  for (int i = 0; i < g.count; ++i) {
    if (!back.trusted.contains(2.0 * t, g.x(i))) continue;  // doubly shrunk
    err = std::max(err, std::abs(back.phi.at(k, i) - dat.phi0[i]));
  }
  CHECK(err < 1e-4);
}

TEST_CASE("non-timelike data are rejected up front") {
  GridSpec1D g(-2.0, 0.1, 41);
  GraphData dat(sampled([](double) { return 0.0; }, g),
                sampled([](double) { return 1.5; }, g));
  CHECK_THROWS_AS(evolve_graph(dat, EvolveConfig{}), Error);
  try {
    evolve_graph(dat, EvolveConfig{});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_timelike);
  }
}

TEST_CASE("steep colliding pulses break down and hit the radicand floor") {
  // two amplitude-3 pulses moving toward each other; the slopes and
  // velocities exceed 1 and the radicand crosses the floor before t = 1
  GridSpec1D g(-20.0, 1.0 / 16.0, 40 * 16 + 1);
  GraphData dat(sampled(
                    [](double x) {
                      return 3.0 * (std::exp(-0.5 * (x + 3) * (x + 3)) +
                                    std::exp(-0.5 * (x - 3) * (x - 3)));
                    },
                    g),
                sampled(
                    [](double x) {
                      return 3.0 * ((x + 3) * std::exp(-0.5 * (x + 3) * (x + 3)) -
                                    (x - 3) * std::exp(-0.5 * (x - 3) * (x - 3)));
                    },
                    g));
  EvolveConfig c;
  c.t_final = 5.0;
  c.cfl = 0.9;
  CHECK_THROWS_AS(evolve_graph(dat, c), Error);
  try {
    evolve_graph(dat, c);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_timelike);
    CHECK(e.exit_code() == 2);
  }
}
