// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// fails. Each criterion states its tolerance inline; order thresholds follow
// the project convention (observed order >= 1.8 for O(h^2) claims, or the
// defect already at rounding level).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "minsurf/diagnostics.hpp"
#include "minsurf/evolution.hpp"
#include "minsurf/graph_solver.hpp"
#include "minsurf/initial_data.hpp"
#include "minsurf/profiles.hpp"
#include "minsurf/reconstruction.hpp"
#include "minsurf/scenario.hpp"

using namespace minsurf;

namespace {

int failures = 0;

void report(int n, bool pass, const std::string& what, const std::string& detail) {
  std::printf("criterion %d: %s - %s (%s)\n", n, pass ? "PASS" : "FAIL", what.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SampledFunction1D sampled(const std::function<double(double)>& f, const GridSpec1D& g) {
  std::vector<double> v(g.count);
  for (int i = 0; i < g.count; ++i) v[i] = f(g.x(i));
  return SampledFunction1D(g, std::move(v));
}

GridSpec1D make_grid(double lo, double hi, double h) {
  return GridSpec1D(lo, h, static_cast<int>(std::round((hi - lo) / h)) + 1);
}

std::string fmt_orders(const std::vector<double>& o) {
  std::ostringstream ss;
  ss << "orders";
  for (double x : o) ss << " " << x;
  return ss.str();
}

bool orders_at_least(const std::vector<double>& errs, double lo, double rounding_floor) {
  if (errs.back() < rounding_floor) return true;
  for (double o : observed_orders(errs))
    if (!(o >= lo)) return false;
  return true;
}

// ---------------------------------------------------------------------------

void criterion1_free_wave() {
  const auto t0 = std::chrono::steady_clock::now();
  const ProfileSpec nu = ProfileSpec::parse("gaussian(a=0.1,sigma=1)");
  const ProfileSpec p0 = ProfileSpec::parse("gaussian(a=0.01,sigma=2)");
  const ProfileSpec p1 = ProfileSpec::parse("gaussian(a=0.005,sigma=1)");
  const double t_final = 5.0;
  bool ok = true;
  std::ostringstream detail;

  for (int which = 0; which < 2; ++which) {
    const bool leap = which == 0;
    const double cfl = leap ? 0.5 : 1.0;
    std::vector<double> errs;
    for (double h : {1.0 / 128, 1.0 / 256, 1.0 / 512}) {
      const double pad = t_final / cfl + 1.0;
      GridSpec1D g = make_grid(-10.0 - pad, 10.0 + pad, h);
      GeometricData gd(sampled([](double) { return 0.0; }, g), sample(nu, g),
                       sample(p0, g), sample(p1, g));
      EvolveConfig c;
      c.cfl = cfl;
      c.t_final = t_final;
      Evolution ev = leap ? evolve_leapfrog(gd, c) : evolve_characteristic(gd, c);
      FreeWave exact(gd);
      const int j = ev.psi.nt - 1;
      const double t = ev.psi.t(j);
      double sup = 0.0;
      for (int i = 0; i < ev.psi.nr; ++i) {
        const double r = ev.psi.r(i);
        if (r < -10.0 || r > 10.0 || !ev.trusted.contains(t, r)) continue;
        sup = std::max(sup, std::abs(ev.psi.at(j, i) - exact(t, r)));
      }
      errs.push_back(sup);
    }
    const std::vector<double> orders = observed_orders(errs);
    for (double o : orders) ok = ok && o >= 1.9 && o <= 2.1;
    detail << (leap ? "leapfrog " : "characteristic ") << fmt_orders(orders) << "; ";
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 10.0;
  detail << "runtime " << dt << "s";
  report(1, ok, "free-wave solutions converge at second order to the closed form",
         detail.str());
}

void criterion2_travelling_wave() {
  const auto t0 = std::chrono::steady_clock::now();
  auto f = [](double x) { return 0.1 * std::exp(-0.5 * x * x); };
  auto fp = [](double x) { return -0.1 * x * std::exp(-0.5 * x * x); };
  const double t_final = 5.0;
  std::vector<double> ref_errs, geo_errs;

  for (double h : {1.0 / 64, 1.0 / 128, 1.0 / 256}) {
    GridSpec1D g = make_grid(-13.0, 19.0, h);
    GraphData dat(sampled(f, g), sampled([&](double x) { return -fp(x); }, g));

    // reference: direct quasilinear solver against f(x - t)
    EvolveConfig c;
    c.cfl = 0.9;
    c.t_final = t_final;
    GraphEvolution ref = evolve_graph(dat, c);
    const int j = ref.phi.nt - 1;
    const double t = ref.phi.t(j);
    double sup = 0.0;
    for (int i = 0; i < ref.phi.nr; ++i) {
      const double x = ref.phi.r(i);
      if (x < -5.0 || x > 11.0 || !ref.trusted.contains(t, x)) continue;
      sup = std::max(sup, std::abs(ref.phi.at(j, i) - f(x - t)));
    }
    ref_errs.push_back(sup);

    // geometric pipeline: convert -> evolve -> reconstruct -> regraph
    GeometricData gd = graph_to_geometric(dat);
    SliceFrame frame = integrate_slice_frame(gd, seed_from_graph(dat));
    Embedding emb = assemble_embedding(frame);
    const int nx = static_cast<int>(std::round(16.0 / h)) + 1;
    Regraphed rg = regraph(emb, QueryLattice{t_final, -5.0, 1.0, h, 1, nx});
    double gsup = 0.0;
    for (int i = 0; i < nx; ++i) {
      if (!rg.valid[i]) continue;
      const double x = -5.0 + i * h;
      gsup = std::max(gsup, std::abs(rg.phi.at(0, i) - f(x - t_final)));
    }
    geo_errs.push_back(gsup);
  }
  const double dt = seconds_since(t0);
  const bool ok_ref = orders_at_least(ref_errs, 1.9, 1e-13);
  const bool ok_geo = orders_at_least(geo_errs, 1.8, 1e-13);
  std::ostringstream detail;
  detail << "reference " << fmt_orders(observed_orders(ref_errs)) << "; pipeline "
         << fmt_orders(observed_orders(geo_errs)) << "; runtime " << dt << "s";
  report(2, ok_ref && ok_geo && dt < 30.0,
         "travelling wave reproduced by both pipelines", detail.str());
}

void criterion3_cross_pipeline() {
  const std::string cfg_text =
      "[graph]\n"
      "phi0 = gaussian(a=0.05, sigma=1)\n"
      "phi1 = zero\n"
      "[evolve]\n"
      "r_min = -12\nr_max = 12\ncfl = 0.95\nt_final = 10\nh = 0.03125\n"
      "scheme = leapfrog\n";
  ScenarioConfig cfg = parse_scenario_string(cfg_text);
  std::vector<double> errs;
  for (double h : {1.0 / 32, 1.0 / 64, 1.0 / 128})
    errs.push_back(cross_pipeline_sup(cfg, h));
  const bool ok = orders_at_least(errs, 1.8, 1e-13);
  report(3, ok, "regraphed embedding converges to the direct solver at t = 10",
         fmt_orders(observed_orders(errs)));
}

void criterion4_flatness() {
  const ProfileSpec bump = ProfileSpec::parse("compact-bump(a=0.05,sigma=1,lo=-1,hi=1)");
  const double t_final = 3.0, cfl = 0.5;
  std::vector<double> curvs;
  bool source_exact = true;
  for (double h : {1.0 / 64, 1.0 / 128, 1.0 / 256}) {
    const double pad = t_final / cfl + 1.0;
    GridSpec1D g = make_grid(-6.0 - pad, 6.0 + pad, h);
    GeometricData gd(sample(bump, g), sample(bump, g),
                     sampled([](double) { return 0.0; }, g),
                     sampled([](double) { return 0.0; }, g));
    EvolveConfig c;
    c.cfl = cfl;
    c.t_final = t_final;
    Evolution ev = evolve_leapfrog(gd, c);
    DiagnosticsReport rep =
        flatness_report(ev, ev.profiles, {-0.5, 0.5}, {-0.5, 0.5});
    source_exact = source_exact && rep.get("source_sup_outside") == 0.0 && rep.all_pass();
    curvs.push_back(rep.get("curvature_sup_outside"));
  }
  const bool small = curvs.back() < 1e-6;
  // second differences of psi divided by h^2 amplify rounding noise, so the
  // decay requirement is waived once the defect is at rounding level
  const bool decays = orders_at_least(curvs, 1.8, 1e-10);
  std::ostringstream detail;
  detail << "source outside diamond exactly zero: " << (source_exact ? "yes" : "no")
         << "; curvature at finest " << curvs.back() << "; "
         << fmt_orders(observed_orders(curvs));
  report(4, source_exact && small && decays,
         "geometry is flat outside the compact diamond", detail.str());
}

void criterion5_bootstrap() {
  const auto t0 = std::chrono::steady_clock::now();
  const double eps = 0.01, t_final = 100.0, h = 1.0 / 128;
  const ProfileSpec lam = ProfileSpec::parse("compact-bump(a=0.002,sigma=1,lo=-1,hi=1)");
  const ProfileSpec p0 = ProfileSpec::parse("gaussian(a=0.002,sigma=1)");
  const ProfileSpec p1 = ProfileSpec::parse("compact-bump(a=0.001,sigma=1,lo=-1,hi=1)");
  GridSpec1D g = make_grid(-10.0 - t_final, 10.0 + t_final, h);
  GeometricData gd(sample(lam, g), sample(lam, g), sample(p0, g), sample(p1, g));

  DiagnosticsReport sm = smallness_check(gd, eps);
  EvolveConfig c;
  c.t_final = t_final;
  Evolution ev = evolve_leapfrog(gd, c);
  DiagnosticsReport bm = bootstrap_monitor(ev, eps);
  const double dt = seconds_since(t0);
  std::ostringstream detail;
  detail << "hypothesis norms " << sm.get("curvature_data_l1") << " / "
         << sm.get("wave_data_norm") << "; sup|psi| = " << bm.get("sup_psi_overall")
         << " vs 3 eps = " << 3 * eps << "; runtime " << dt << "s";
  report(5, sm.all_pass() && bm.all_pass() && dt < 120.0,
         "small data stay below 3 eps to t = 100 with the chain bound holding",
         detail.str());
}

void criterion6_exact_transport() {
  const double h = 1.0 / 128;
  GridSpec1D g = make_grid(-5.0, 5.0, h);
  const ProfileSpec a = ProfileSpec::parse("gaussian(a=0.3,sigma=0.8)");
  const ProfileSpec b = ProfileSpec::parse("gaussian(a=0.2,sigma=1.3,center=0.5)");
  TransportedSource src{sample(a, g), sample(b, g)};
  double worst = 0.0;
  for (int k = 1; k <= 256; ++k) {
    const double t = k * h;
    for (int i = 0; i < g.count; ++i) {
      const double r = g.x(i);
      // discrete derivative of lambda along its null direction, and of nu
      // along the opposite one; both vanish identically on the lattice
      const double dl = src.lambda(t, r - h) - src.lambda(t - h, r);
      const double dn = src.nu(t, r + h) - src.nu(t - h, r);
      const double scale = std::max({1.0, std::abs(src.lambda(t, r)), std::abs(src.nu(t, r))});
      worst = std::max(worst, std::max(std::abs(dl), std::abs(dn)) / scale);
    }
  }
  std::ostringstream detail;
  detail << "max relative null-derivative " << worst;
  report(6, worst < 1e-13, "assembled profiles transport exactly along the lattice",
         detail.str());
}

void criterion7_product_factorization() {
  const char* specs[3][2] = {
      {"gaussian(a=0.3,sigma=1)", "gaussian(a=0.2,sigma=0.7,center=0.4)"},
      {"compact-bump(a=0.5,sigma=2,lo=-1,hi=1)", "gaussian(a=1,sigma=1)"},
      {"constant(value=0.25)", "compact-bump(a=0.8,sigma=1,lo=-2,hi=0)"}};
  bool ok = true;
  std::ostringstream detail;
  for (auto& pair : specs) {
    GridSpec1D gu = make_grid(-4.0, 4.0, 1.0 / 64);
    GridSpec1D gv = make_grid(-3.0, 5.0, 1.0 / 32);
    NullPair np{sample(ProfileSpec::parse(pair[0]), gu),
                sample(ProfileSpec::parse(pair[1]), gv)};
    ProductL1 p = product_l1(np);  // throws if factorization fails at 1e-12
    const double rel = std::abs(p.product - p.grid2d) / std::max(1e-300, p.product);
    ok = ok && rel < 1e-12 && p.tr_measure == 2.0 * p.product;
    detail << rel << " ";
  }
  report(7, ok, "L1 of the product equals the product of L1 norms to rounding",
         "relative gaps " + detail.str());
}

void criterion8_reconstruction() {
  const char* names[] = {"null_u_defect", "null_v_defect", "metric_vs_evolution",
                         "normal_unit_defect", "lambda_recovered_defect",
                         "nu_recovered_defect", "trace_k_defect"};
  const std::string cfg_text =
      "[geometric]\n"
      "lambda0 = compact-bump(a=0.01,sigma=1,lo=-1,hi=1)\n"
      "nu0 = compact-bump(a=0.01,sigma=1,lo=-1,hi=1)\n"
      "psi0 = gaussian(a=0.01,sigma=1)\n"
      "psi1 = compact-bump(a=0.005,sigma=1,lo=-1,hi=1)\n"
      "[evolve]\n"
      "r_min = -4\nr_max = 4\ncfl = 1\nt_final = 2\nh = 0.03125\n"
      "scheme = characteristic\n"
      "[verify]\nepsilon = 0.05\n";
  ScenarioConfig cfg = parse_scenario_string(cfg_text);

  std::vector<DiagnosticsReport> reps;
  for (double h : {1.0 / 32, 1.0 / 64, 1.0 / 128}) {
    PipelineResult p = run_geometric_pipeline(cfg, h);
    reps.push_back(embedding_checks(p.emb, p.ev, p.ev.profiles));
  }
  bool ok = true;
  std::ostringstream detail;
  for (const char* name : names) {
    std::vector<double> errs;
    for (const auto& r : reps) errs.push_back(r.get(name));
    const bool good = orders_at_least(errs, 1.8, 1e-12);
    ok = ok && good;
    detail << name << (good ? " ok" : " BAD") << " (" << errs.back() << "); ";
  }

  // flat case: every defect at rounding level
  const std::string flat_text =
      "[geometric]\n"
      "lambda0 = zero\nnu0 = zero\npsi0 = constant(value=0.6931471805599453)\npsi1 = zero\n"
      "[evolve]\nr_min = -4\nr_max = 4\ncfl = 1\nt_final = 2\nh = 0.015625\n"
      "scheme = characteristic\n";
  PipelineResult flat = run_geometric_pipeline(parse_scenario_string(flat_text), 1.0 / 64);
  DiagnosticsReport fr = embedding_checks(flat.emb, flat.ev, flat.ev.profiles);
  double flat_worst = 0.0;
  for (const char* name : names) flat_worst = std::max(flat_worst, fr.get(name));
  ok = ok && flat_worst < 1e-12;
  detail << "flat worst " << flat_worst;
  report(8, ok, "embedding defects decay at second order; flat case exact", detail.str());
}

void criterion9_negative_control() {
  const double h = 1.0 / 32, t_final = 20.0;
  GridSpec1D g = make_grid(-5.0 - t_final, 5.0 + t_final, h);
  const ProfileSpec big = ProfileSpec::parse("gaussian(a=5,sigma=1)");
  GeometricData gd(sample(big, g), sample(big, g),
                   sampled([](double) { return 0.0; }, g),
                   sampled([](double) { return 0.0; }, g));
  EvolveConfig c;
  c.t_final = t_final;
  bool guard_tripped = false, monitor_tripped = false;
  std::string note;
  try {
    Evolution ev = evolve_leapfrog(gd, c);
    DiagnosticsReport bm = bootstrap_monitor(ev, 0.01);
    monitor_tripped = !bm.all_pass();
    note = "bootstrap monitor flagged the violation";
  } catch (const Error& e) {
    guard_tripped = e.kind() == ErrorKind::solver;
    note = std::string("solver guard: ") + e.what();
  }
  report(9, guard_tripped || monitor_tripped,
         "amplitude-5 data trip the guard or the bootstrap monitor", note);
}

}  // namespace

int main() {
  criterion1_free_wave();
  criterion2_travelling_wave();
  criterion3_cross_pipeline();
  criterion4_flatness();
  criterion5_bootstrap();
  criterion6_exact_transport();
  criterion7_product_factorization();
  criterion8_reconstruction();
  criterion9_negative_control();
  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
