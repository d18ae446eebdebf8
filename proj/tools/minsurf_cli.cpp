// Scenario-driven front end: convert / evolve / reconstruct / verify /
// convergence over a config file. Exit codes: 0 ok, 1 usage, 2 not-timelike,
// 3 solver, 4 reconstruction, 5 verification failure.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <limits>
#include <json.hpp>

#include "minsurf/io.hpp"
#include "minsurf/scenario.hpp"

namespace fs = std::filesystem;
using namespace minsurf;

namespace {

struct Options {
  std::string config;
  std::string out_dir;  // overrides [output] dir when set
  std::string scheme;   // overrides [evolve] scheme when set
  double resolution = 0.0;  // overrides [evolve] h when > 0
  bool quiet = false;
};

ScenarioConfig load(const Options& opt) {
  ScenarioConfig cfg = parse_scenario_file(opt.config);
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  if (opt.resolution > 0) cfg.evolve.h = opt.resolution;
  if (!opt.scheme.empty()) {
    if (opt.scheme == "leapfrog") cfg.evolve.scheme = Scheme::leapfrog;
    else if (opt.scheme == "characteristic") cfg.evolve.scheme = Scheme::characteristic;
    else fail(ErrorKind::usage, "unknown scheme '" + opt.scheme + "'");
  }
  if (opt.quiet) cfg.quiet = true;
  fs::create_directories(cfg.out_dir);
  return cfg;
}

std::string out_path(const ScenarioConfig& cfg, const std::string& name) {
  return (fs::path(cfg.out_dir) / name).string();
}

void write_provenance(const ScenarioConfig& cfg, const std::string& command,
                      const GridSpec1D& grid, const std::vector<std::string>& files) {
  nlohmann::json j;
  j["command"] = command;
  j["config_hash"] = cfg.hash;
  j["grid"] = {{"origin", grid.origin}, {"h", grid.h}, {"count", grid.count}};
  j["scheme"] = cfg.evolve.scheme == Scheme::characteristic ? "characteristic" : "leapfrog";
  j["files"] = files;
  write_text_file(out_path(cfg, "provenance.json"), j.dump(2) + "\n");
}

void say(const ScenarioConfig& cfg, const std::string& msg) {
  if (!cfg.quiet) std::cout << msg << "\n";
}

int cmd_convert(const ScenarioConfig& cfg) {
  if (!cfg.has_graph)
    fail(ErrorKind::usage, "convert: scenario must declare a [graph] block");
  const GeometricData gd = geometric_for(cfg, cfg.evolve.h);
  write_profile_csv(out_path(cfg, "lambda0.csv"), gd.lambda0, "lambda0");
  write_profile_csv(out_path(cfg, "nu0.csv"), gd.nu0, "nu0");
  write_profile_csv(out_path(cfg, "psi0.csv"), gd.psi0, "psi0");
  write_profile_csv(out_path(cfg, "psi1.csv"), gd.psi1, "psi1");
  write_provenance(cfg, "convert", gd.grid(),
                   {"lambda0.csv", "nu0.csv", "psi0.csv", "psi1.csv"});
  say(cfg, "convert: wrote geometric data (" + std::to_string(gd.grid().count) + " nodes)");
  return 0;
}

int cmd_evolve(const ScenarioConfig& cfg) {
  const Evolution ev = run_evolution(cfg, cfg.evolve.h, cfg.evolve.scheme);
  std::vector<std::string> files;
  const int last = ev.psi.nt - 1;
  const int every = cfg.snapshot_every > 0 ? cfg.snapshot_every : last > 0 ? last : 1;
  for (int j = 0; j <= last; j += every) {
    char name[64];
    std::snprintf(name, sizeof name, "psi_%05d.csv", j);
    write_snapshot_csv(out_path(cfg, name), ev, j);
    files.emplace_back(name);
  }
  if ((last % every) != 0) {
    char name[64];
    std::snprintf(name, sizeof name, "psi_%05d.csv", last);
    write_snapshot_csv(out_path(cfg, name), ev, last);
    files.emplace_back(name);
  }
  DiagnosticsReport rep = bootstrap_monitor(ev, cfg.epsilon);
  if (cfg.has_supports) {
    const DiagnosticsReport fl =
        flatness_report(ev, ev.profiles, {cfg.u_support_lo, cfg.u_support_hi},
                        {cfg.v_support_lo, cfg.v_support_hi});
    for (const auto& [k, v] : fl.metrics) rep.set("flatness_" + k, v);
    for (const auto& f : fl.flags)
      rep.flag("flatness_" + f.name, "flatness_" + f.metric, f.tolerance, f.pass);
  }
  rep.meta["config_hash"] = cfg.hash;
  write_text_file(out_path(cfg, "report_evolve.json"), rep.to_json_string() + "\n");
  files.emplace_back("report_evolve.json");
  write_provenance(cfg, "evolve", GridSpec1D(ev.psi.r0, ev.psi.dr, ev.psi.nr), files);
  say(cfg, "evolve: " + std::to_string(ev.psi.nt) + " levels, sup|psi| = " +
              format_g17(rep.series.at("sup_psi").back()));
  return 0;
}

int cmd_reconstruct(const ScenarioConfig& cfg) {
  const PipelineResult p = run_geometric_pipeline(cfg, cfg.evolve.h);
  write_embedding_csv(out_path(cfg, "embedding.csv"), p.emb);
  DiagnosticsReport rep = embedding_checks(p.emb, p.ev, p.ev.profiles);
  rep.meta["config_hash"] = cfg.hash;
  write_text_file(out_path(cfg, "report_reconstruct.json"), rep.to_json_string() + "\n");
  write_provenance(cfg, "reconstruct", p.gd.grid(),
                   {"embedding.csv", "report_reconstruct.json"});
  say(cfg, "reconstruct: metric defect = " + format_g17(rep.get("metric_vs_evolution")));
  return 0;
}

int cmd_convergence(const ScenarioConfig& cfg) {
  if (cfg.resolutions.empty())
    fail(ErrorKind::usage, "convergence: [verify] resolutions is required");
  DiagnosticsReport rep = convergence_study(cfg, cfg.resolutions);
  rep.meta["config_hash"] = cfg.hash;
  write_text_file(out_path(cfg, "report_convergence.json"), rep.to_json_string() + "\n");
  say(cfg, "convergence: min order = " + format_g17(rep.get("min_order")));
  if (!rep.all_pass()) fail(ErrorKind::verification, "convergence order below 1.8");
  return 0;
}

int cmd_verify(const ScenarioConfig& cfg) {
  DiagnosticsReport rep;
  rep.meta["config_hash"] = cfg.hash;

  const GeometricData gd = geometric_for(cfg, cfg.evolve.h);
  const DiagnosticsReport sm = smallness_check(gd, cfg.epsilon);
  for (const auto& [k, v] : sm.metrics) rep.set("smallness_" + k, v);
  for (const auto& f : sm.flags)
    rep.flag("smallness_" + f.name, "smallness_" + f.metric, f.tolerance, f.pass);

  const Evolution ev = run_evolution(cfg, cfg.evolve.h, cfg.evolve.scheme);
  const DiagnosticsReport bm = bootstrap_monitor(ev, cfg.epsilon);
  for (const auto& [k, v] : bm.metrics) rep.set("bootstrap_" + k, v);
  for (const auto& f : bm.flags)
    rep.flag("bootstrap_" + f.name, "bootstrap_" + f.metric, f.tolerance, f.pass);

  const ProductL1 pl = product_l1(ev.profiles);
  rep.set("product_l1", pl.product);
  rep.set("product_l1_grid2d", pl.grid2d);
  rep.set("product_l1_tr", pl.tr_measure);

  if (cfg.has_supports) {
    const DiagnosticsReport fl =
        flatness_report(ev, ev.profiles, {cfg.u_support_lo, cfg.u_support_hi},
                        {cfg.v_support_lo, cfg.v_support_hi});
    for (const auto& [k, v] : fl.metrics) rep.set("flatness_" + k, v);
    for (const auto& f : fl.flags)
      rep.flag("flatness_" + f.name, "flatness_" + f.metric, f.tolerance, f.pass);
  }

  if (cfg.resolutions.size() >= 3) {
    const DiagnosticsReport cv = convergence_study(cfg, cfg.resolutions);
    for (const auto& [k, v] : cv.metrics) rep.set("convergence_" + k, v);
    for (const auto& f : cv.flags)
      rep.flag("convergence_" + f.name, "convergence_" + f.metric, f.tolerance, f.pass);
  }

  if (cfg.has_graph) {
    if (cfg.resolutions.size() >= 3) {
      std::vector<double> errs;
      for (double h : cfg.resolutions) errs.push_back(cross_pipeline_sup(cfg, h));
      const std::vector<double> orders = observed_orders(errs);
      rep.series["cross_pipeline_errors"] = errs;
      rep.series["cross_pipeline_orders"] = orders;
      double mo = std::numeric_limits<double>::infinity();
      for (double o : orders) mo = std::min(mo, o);
      rep.set("cross_pipeline_min_order", mo);
      rep.flag("cross_pipeline_order", "cross_pipeline_min_order", 1.8, mo >= 1.8);
    } else {
      rep.set("cross_pipeline_sup", cross_pipeline_sup(cfg, cfg.evolve.h));
    }
  }

  write_text_file(out_path(cfg, "report_verify.json"), rep.to_json_string() + "\n");
  say(cfg, std::string("verify: ") + (rep.all_pass() ? "pass" : "FAIL"));
  if (!rep.all_pass()) fail(ErrorKind::verification, "one or more verification flags failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"timelike minimal surface toolkit"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "scenario config file")->required();
    sub->add_option("--out", opt.out_dir, "output directory (overrides [output] dir)");
    sub->add_option("--scheme", opt.scheme, "leapfrog | characteristic");
    sub->add_option("--resolution", opt.resolution, "grid spacing h override");
    sub->add_flag("--quiet", opt.quiet, "suppress progress output");
  };

  CLI::App* convert = app.add_subcommand("convert", "graph data -> geometric data CSVs");
  CLI::App* evolve = app.add_subcommand("evolve", "run the conformal-factor evolution");
  CLI::App* reconstruct = app.add_subcommand("reconstruct", "build and check the embedding");
  CLI::App* verify = app.add_subcommand("verify", "aggregated property checks");
  CLI::App* convergence = app.add_subcommand("convergence", "multi-resolution study");
  for (CLI::App* sub : {convert, evolve, reconstruct, verify, convergence}) add_common(sub);

  try {
    app.parse(argc, argv);
    const ScenarioConfig cfg = load(opt);
    if (convert->parsed()) return cmd_convert(cfg);
    if (evolve->parsed()) return cmd_evolve(cfg);
    if (reconstruct->parsed()) return cmd_reconstruct(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_convergence(cfg);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
