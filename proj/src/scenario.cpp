#include "minsurf/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "minsurf/initial_data.hpp"

namespace minsurf {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& s, const std::string& key) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::usage, "scenario: bad numeric value for " + key + ": '" + s + "'");
  }
}

std::vector<double> to_list(const std::string& s, const std::string& key) {
  std::vector<double> out;
  std::istringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(to_double(trim(cell), key));
  return out;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void ScenarioConfig::validate() const {
  if (has_graph == has_geometric)
    fail(ErrorKind::usage,
         "scenario: exactly one of [graph] or [geometric] must be present");
  evolve.validate();
  if (snapshot_every < 0) fail(ErrorKind::usage, "scenario: snapshot_every must be >= 0");
  if (!(epsilon > 0)) fail(ErrorKind::usage, "scenario: epsilon must be positive");
  if (has_supports && (!(u_support_lo < u_support_hi) || !(v_support_lo < v_support_hi)))
    fail(ErrorKind::usage, "scenario: supports must be non-empty intervals lo,hi");
}

ScenarioConfig parse_scenario_string(const std::string& text) {
  ScenarioConfig cfg;
  cfg.hash = fnv1a_hex(text);
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hashpos = line.find('#');
    if (hashpos != std::string::npos) line.erase(hashpos);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (line.front() == '[') {
      if (line.back() != ']')
        fail(ErrorKind::usage, "scenario: malformed section header" + where);
      section = trim(line.substr(1, line.size() - 2));
      if (section == "graph")
        cfg.has_graph = true;
      else if (section == "geometric")
        cfg.has_geometric = true;
      else if (section != "evolve" && section != "verify" && section != "output")
        fail(ErrorKind::usage, "scenario: unknown section [" + section + "]" + where);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::usage, "scenario: expected key = value" + where);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (section.empty())
      fail(ErrorKind::usage, "scenario: assignment before any section" + where);

    if (section == "graph") {
      if (key == "phi0") cfg.phi0 = ProfileSpec::parse(val);
      else if (key == "phi1") cfg.phi1 = ProfileSpec::parse(val);
      else fail(ErrorKind::usage, "scenario: unknown [graph] key " + key + where);
    } else if (section == "geometric") {
      if (key == "lambda0") cfg.lambda0 = ProfileSpec::parse(val);
      else if (key == "nu0") cfg.nu0 = ProfileSpec::parse(val);
      else if (key == "psi0") cfg.psi0 = ProfileSpec::parse(val);
      else if (key == "psi1") cfg.psi1 = ProfileSpec::parse(val);
      else fail(ErrorKind::usage, "scenario: unknown [geometric] key " + key + where);
    } else if (section == "evolve") {
      if (key == "r_min") cfg.evolve.r_min = to_double(val, key);
      else if (key == "r_max") cfg.evolve.r_max = to_double(val, key);
      else if (key == "h") cfg.evolve.h = to_double(val, key);
      else if (key == "cfl") cfg.evolve.cfl = to_double(val, key);
      else if (key == "t_final") cfg.evolve.t_final = to_double(val, key);
      else if (key == "snapshot_every") cfg.snapshot_every = static_cast<int>(to_double(val, key));
      else if (key == "scheme") {
        if (val == "leapfrog") cfg.evolve.scheme = Scheme::leapfrog;
        else if (val == "characteristic") cfg.evolve.scheme = Scheme::characteristic;
        else fail(ErrorKind::usage, "scenario: unknown scheme '" + val + "'" + where);
      } else fail(ErrorKind::usage, "scenario: unknown [evolve] key " + key + where);
    } else if (section == "verify") {
      if (key == "epsilon") cfg.epsilon = to_double(val, key);
      else if (key == "u_support" || key == "v_support") {
        const auto pair = to_list(val, key);
        if (pair.size() != 2)
          fail(ErrorKind::usage, "scenario: " + key + " wants 'lo,hi'" + where);
        cfg.has_supports = true;
        (key[0] == 'u' ? cfg.u_support_lo : cfg.v_support_lo) = pair[0];
        (key[0] == 'u' ? cfg.u_support_hi : cfg.v_support_hi) = pair[1];
      } else if (key == "resolutions") cfg.resolutions = to_list(val, key);
      else fail(ErrorKind::usage, "scenario: unknown [verify] key " + key + where);
    } else {  // output
      if (key == "dir") cfg.out_dir = val;
      else if (key == "quiet") cfg.quiet = (val == "true" || val == "1");
      else fail(ErrorKind::usage, "scenario: unknown [output] key " + key + where);
    }
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::usage, "cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario_string(ss.str());
}

namespace {

GridSpec1D padded_grid(const EvolveConfig& e, double h, double slope) {
  const double pad = std::ceil(slope * e.t_final / h - 1e-9) * h;
  const double origin = e.r_min - pad;
  const int count = static_cast<int>(std::ceil((e.r_max + pad - origin) / h - 1e-9)) + 1;
  return GridSpec1D(origin, h, count);
}

GraphData sample_graph_on(const ScenarioConfig& cfg, const GridSpec1D& g) {
  return GraphData(sample(cfg.phi0, g), sample(cfg.phi1, g));
}

}  // namespace

GraphData sample_graph(const ScenarioConfig& cfg, double h) {
  if (!cfg.has_graph) fail(ErrorKind::usage, "sample_graph: scenario has no [graph] block");
  // provisional sample to estimate the worst characteristic speed
  GraphData probe = sample_graph_on(cfg, padded_grid(cfg.evolve, h, 1.0 / cfg.evolve.cfl));
  const SampledFunction1D d1 = derivative(probe.phi0);
  double cmax = 1.0;
  for (int i = 0; i < d1.size(); ++i)
    cmax = std::max(cmax, characteristic_speed(probe.phi1[i], d1[i]));
  const double slope = 1.05 * cmax / cfg.evolve.cfl;
  return sample_graph_on(cfg, padded_grid(cfg.evolve, h, slope));
}

GeometricData sample_geometric(const ScenarioConfig& cfg, double h) {
  if (!cfg.has_geometric)
    fail(ErrorKind::usage, "sample_geometric: scenario has no [geometric] block");
  const GridSpec1D g = padded_grid(cfg.evolve, h, 1.0 / cfg.evolve.cfl);
  return GeometricData(sample(cfg.lambda0, g), sample(cfg.nu0, g),
                       sample(cfg.psi0, g), sample(cfg.psi1, g));
}

GeometricData geometric_for(const ScenarioConfig& cfg, double h) {
  if (cfg.has_geometric) return sample_geometric(cfg, h);
  const GridSpec1D g = padded_grid(cfg.evolve, h, 1.0 / cfg.evolve.cfl);
  return graph_to_geometric(sample_graph_on(cfg, g));
}

Evolution run_evolution(const ScenarioConfig& cfg, double h, Scheme scheme) {
  const GeometricData gd = geometric_for(cfg, h);
  EvolveConfig e = cfg.evolve;
  e.h = h;
  e.scheme = scheme;
  return scheme == Scheme::characteristic ? evolve_characteristic(gd, e)
                                          : evolve_leapfrog(gd, e);
}

PipelineResult run_geometric_pipeline(const ScenarioConfig& cfg, double h) {
  GeometricData gd = geometric_for(cfg, h);
  EvolveConfig e = cfg.evolve;
  e.h = h;
  Evolution ev = e.scheme == Scheme::characteristic ? evolve_characteristic(gd, e)
                                                    : evolve_leapfrog(gd, e);
  FrameNode seed;
  if (cfg.has_graph) {
    const GridSpec1D g = padded_grid(cfg.evolve, h, 1.0 / cfg.evolve.cfl);
    seed = seed_from_graph(sample_graph_on(cfg, g));
  } else {
    seed = canonical_flat_seed(gd);
  }
  SliceFrame frame = integrate_slice_frame(gd, seed);
  Embedding emb = assemble_embedding(frame);
  return PipelineResult{std::move(gd), std::move(ev), std::move(frame), std::move(emb)};
}

DiagnosticsReport convergence_study(const ScenarioConfig& cfg,
                                    const std::vector<double>& hs) {
  if (hs.size() < 3)
    fail(ErrorKind::usage, "convergence_study: need at least 3 resolutions");
  for (size_t i = 0; i + 1 < hs.size(); ++i)
    if (std::abs(hs[i + 1] - 0.5 * hs[i]) > 1e-12 * hs[i])
      fail(ErrorKind::usage, "convergence_study: resolutions must halve (non-nested grids)");

  std::vector<Evolution> runs;
  runs.reserve(hs.size());
  for (double h : hs) runs.push_back(run_evolution(cfg, h, cfg.evolve.scheme));

  // use the d'Alembert oracle when the curvature source vanishes identically
  const TransportedSource& fine_src = runs.back().source;
  bool zero_source = true;
  for (int i = 0; i < fine_src.lambda0.size(); ++i)
    if (fine_src.lambda0[i] * fine_src.nu0[i] != 0.0) {
      zero_source = false;
      break;
    }

  DiagnosticsReport rep;
  std::vector<double> errors;
  double scale = 0.0;
  if (zero_source) {
    for (size_t k = 0; k < hs.size(); ++k) {
      const GeometricData gd = geometric_for(cfg, hs[k]);
      const FreeWave exact(gd);
      const Field2D& psi = runs[k].psi;
      const int j = psi.nt - 1;
      double sup = 0.0;
      for (int i = 0; i < psi.nr; ++i) {
        if (!runs[k].trusted.contains(psi.t(j), psi.r(i))) continue;
        sup = std::max(sup, std::abs(psi.at(j, i) - exact(psi.t(j), psi.r(i))));
        scale = std::max(scale, std::abs(psi.at(j, i)));
      }
      errors.push_back(sup);
    }
    rep.meta["oracle"] = "dalembert";
  } else {
    const Evolution& fine = runs.back();
    for (size_t k = 0; k + 1 < hs.size(); ++k) {
      errors.push_back(
          compare_solutions(runs[k].psi, runs[k].trusted, fine.psi, fine.trusted).sup);
      scale = std::max(scale, errors.back());
    }
    rep.meta["oracle"] = "self";
  }

  const std::vector<double> orders = observed_orders(errors);
  rep.series["errors"] = errors;
  rep.series["orders"] = orders;
  for (size_t k = 0; k < errors.size(); ++k)
    rep.set("error_" + std::to_string(k), errors[k]);
  double min_order = std::numeric_limits<double>::infinity();
  for (double o : orders) min_order = std::min(min_order, o);
  rep.set("min_order", min_order);
  const bool rounding = errors.back() < 1e-12 * std::max(1.0, scale);
  rep.meta["rounding_level"] = rounding ? "true" : "false";
  rep.flag("convergence_order", "min_order", 1.8, rounding || min_order >= 1.8);
  return rep;
}

double cross_pipeline_sup(const ScenarioConfig& cfg, double h) {
  if (!cfg.has_graph)
    fail(ErrorKind::usage, "cross_pipeline_sup: scenario has no [graph] block");
  EvolveConfig e = cfg.evolve;
  e.h = h;
  const GraphEvolution ref = evolve_graph(sample_graph(cfg, h), e);
  const PipelineResult p = run_geometric_pipeline(cfg, h);

  const int j = ref.phi.nt - 1;
  const double t = ref.phi.t(j);
  QueryLattice q{t, ref.phi.r0, 1.0, ref.phi.dr, 1, ref.phi.nr};
  const Regraphed rg = regraph(p.emb, q);

  double sup = 0.0;
  long used = 0;
  for (int i = 0; i < ref.phi.nr; ++i) {
    const double x = ref.phi.r(i);
    if (!rg.valid[static_cast<size_t>(i)]) continue;
    if (!ref.trusted.contains(t, x)) continue;
    if (x < cfg.evolve.r_min || x > cfg.evolve.r_max) continue;
    sup = std::max(sup, std::abs(rg.phi.at(0, i) - ref.phi.at(j, i)));
    ++used;
  }
  if (used == 0)
    fail(ErrorKind::invalid_input, "cross_pipeline_sup: no comparable nodes");
  return sup;
}

}  // namespace minsurf
