#pragma once

#include <string>
#include <vector>

#include "minsurf/diagnostics.hpp"
#include "minsurf/evolution.hpp"
#include "minsurf/graph_solver.hpp"
#include "minsurf/profiles.hpp"
#include "minsurf/reconstruction.hpp"

namespace minsurf {

// Scenario file grammar: UTF-8, line oriented, `#` comments,
// `[section]` headers, `key = value` assignments. Sections:
//   [graph]      phi0, phi1                      (profile descriptors)
//   [geometric]  lambda0, nu0, psi0, psi1
//   [evolve]     r_min, r_max, h, cfl, t_final, scheme, snapshot_every
//   [verify]     epsilon, u_support, v_support, resolutions
//   [output]     dir, quiet
// Exactly one of [graph] / [geometric] must be present. Supports are
// written `lo,hi`; resolutions is a comma-separated list of h values.
struct ScenarioConfig {
  bool has_graph = false;
  bool has_geometric = false;
  ProfileSpec phi0, phi1;
  ProfileSpec lambda0, nu0, psi0, psi1;

  EvolveConfig evolve;
  int snapshot_every = 0;  // 0: final level only

  double epsilon = 0.01;
  bool has_supports = false;
  double u_support_lo = 0.0, u_support_hi = 0.0;
  double v_support_lo = 0.0, v_support_hi = 0.0;
  std::vector<double> resolutions;

  std::string out_dir = ".";
  bool quiet = false;
  std::string hash;  // FNV-1a of the config text

  void validate() const;
};

ScenarioConfig parse_scenario_string(const std::string& text);
ScenarioConfig parse_scenario_file(const std::string& path);

std::string fnv1a_hex(const std::string& text);

// Data samplers on grids padded so that the trusted region still covers
// [r_min, r_max] at t_final. The padding accounts for the numerical
// dependence slope h/dt of the corresponding solver.
GraphData sample_graph(const ScenarioConfig& cfg, double h);
GeometricData sample_geometric(const ScenarioConfig& cfg, double h);
// Geometric data regardless of which block the scenario declares
// (converts sampled graph data when needed).
GeometricData geometric_for(const ScenarioConfig& cfg, double h);

Evolution run_evolution(const ScenarioConfig& cfg, double h, Scheme scheme);

struct PipelineResult {
  GeometricData gd;
  Evolution ev;
  SliceFrame frame;
  Embedding emb;
};

// convert -> evolve -> reconstruct over the full padded slice. Graph
// scenarios seed the frame from the graph jet; geometric scenarios use the
// canonical flat-frame seed.
PipelineResult run_geometric_pipeline(const ScenarioConfig& cfg, double h);

// Self-convergence study at the given resolutions (each must halve the
// previous; >= 3 required). Compares the evolved psi of each coarse run
// against the finest at the final common time, or against the d'Alembert
// closed form when the curvature source vanishes. Reports errors and
// observed orders; the pass flag requires every order >= 1.8 (skipped at
// rounding level).
DiagnosticsReport convergence_study(const ScenarioConfig& cfg,
                                    const std::vector<double>& resolutions);

// Sup difference at resolution h between the regraphed geometric pipeline
// and the direct graph solver, over the final time level of the reference
// lattice (trusted nodes where the inversion converged). Requires a [graph]
// scenario.
double cross_pipeline_sup(const ScenarioConfig& cfg, double h);

}  // namespace minsurf
