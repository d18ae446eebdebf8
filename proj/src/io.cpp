#include "minsurf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "minsurf/evolution.hpp"
#include "minsurf/graph_solver.hpp"
#include "minsurf/reconstruction.hpp"

namespace minsurf {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_profile_csv(const std::string& path, const SampledFunction1D& f,
                       const std::string& value_name) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::usage, "cannot open for writing: " + path);
  out << "x," << value_name << "\n";
  for (int i = 0; i < f.size(); ++i)
    out << format_g17(f.grid.x(i)) << "," << format_g17(f[i]) << "\n";
}

SampledFunction1D read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::usage, "cannot open: " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> xs, ys;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string xcell, ycell;
    if (!std::getline(ss, xcell, ',') || !std::getline(ss, ycell, ','))
      fail(ErrorKind::usage, "malformed CSV row in " + path + ": " + line);
    xs.push_back(std::stod(xcell));
    ys.push_back(std::stod(ycell));
  }
  if (xs.size() < 2) fail(ErrorKind::usage, "CSV has fewer than 2 rows: " + path);
  const double h = xs[1] - xs[0];
  if (!(h > 0)) fail(ErrorKind::usage, "CSV grid not increasing: " + path);
  for (size_t i = 1; i < xs.size(); ++i)
    if (std::abs(xs[i] - xs[0] - static_cast<double>(i) * h) > 1e-9 * std::max(1.0, std::abs(xs[i])))
      fail(ErrorKind::usage, "CSV grid not uniform: " + path);
  return SampledFunction1D(GridSpec1D(xs[0], h, static_cast<int>(xs.size())), std::move(ys));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::usage, "cannot open for writing: " + path);
  out << content;
}

void write_snapshot_csv(const std::string& path, const Evolution& ev, int level) {
  if (level < 0 || level >= ev.psi.nt)
    fail(ErrorKind::usage, "write_snapshot_csv: level out of range");
  std::ofstream out(path);
  if (!out) fail(ErrorKind::usage, "cannot open for writing: " + path);
  out << "r,psi,lambda,nu,source\n";
  const double t = ev.psi.t(level);
  for (int i = 0; i < ev.psi.nr; ++i) {
    const double r = ev.psi.r(i);
    const double lam = ev.source.lambda(t, r);
    const double nu = ev.source.nu(t, r);
    out << format_g17(r) << "," << format_g17(ev.psi.at(level, i)) << ","
        << format_g17(lam) << "," << format_g17(nu) << "," << format_g17(lam * nu) << "\n";
  }
}

void write_graph_snapshot_csv(const std::string& path, const GraphEvolution& ev, int level) {
  if (level < 0 || level >= ev.phi.nt)
    fail(ErrorKind::usage, "write_graph_snapshot_csv: level out of range");
  std::ofstream out(path);
  if (!out) fail(ErrorKind::usage, "cannot open for writing: " + path);
  out << "x,phi,phi_t\n";
  for (int i = 0; i < ev.phi.nr; ++i)
    out << format_g17(ev.phi.r(i)) << "," << format_g17(ev.phi.at(level, i)) << ","
        << format_g17(ev.phi_t.at(level, i)) << "\n";
}

void write_embedding_csv(const std::string& path, const Embedding& e) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::usage, "cannot open for writing: " + path);
  out << "u,v,x0,x1,x2\n";
  for (int iu = 0; iu < e.ugrid.count; ++iu)
    for (int iv = 0; iv < e.vgrid.count; ++iv) {
      const Vec3 X = e.point(iu, iv);
      out << format_g17(e.ugrid.x(iu)) << "," << format_g17(e.vgrid.x(iv)) << ","
          << format_g17(X[0]) << "," << format_g17(X[1]) << "," << format_g17(X[2]) << "\n";
    }
}

}  // namespace minsurf
