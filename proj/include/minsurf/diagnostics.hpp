#pragma once

#include <map>
#include <string>
#include <vector>

#include "minsurf/evolution.hpp"

namespace minsurf {

// Structured record of residuals, norms, bounds, and convergence orders.
// Every pass/fail flag references a named metric and the tolerance it was
// judged against.
struct DiagnosticsReport {
  struct Flag {
    std::string name;
    std::string metric;
    double tolerance = 0.0;
    bool pass = false;
  };

  std::map<std::string, double> metrics;
  std::map<std::string, std::vector<double>> series;
  std::vector<Flag> flags;
  std::map<std::string, std::string> meta;

  void set(const std::string& name, double value) { metrics[name] = value; }
  double get(const std::string& name) const;
  void flag(const std::string& name, const std::string& metric, double tol, bool pass);
  bool all_pass() const;
  std::string to_json_string(int indent = 2) const;
};

// Smallness hypotheses: ||lambda0||_1 + ||nu0||_1 <= eps and
// ||psi0||_inf + ||psi0'||_1 + ||psi1||_1 < eps.
DiagnosticsReport smallness_check(const GeometricData& gd, double eps);

struct ProductL1 {
  double product;        // ||Lambda||_1 * ||V||_1
  double grid2d;         // 2D trapezoid of |Lambda(u) V(v)|, equal to rounding
  double tr_measure;     // same quantity in the (t,r) measure (Jacobian 2)
};

// L^1_{u,v} of lambda*nu via the exact product factorization. The 2D
// trapezoid is recomputed independently and must agree to rounding.
ProductL1 product_l1(const NullPair& np);

// Tracks sup over trusted nodes of |psi| per level against the 3 eps
// bootstrap bound, and the proof's chain quantity eps + e^{sup|psi|} ||lambda
// nu||_{L1_{u,v}}.
DiagnosticsReport bootstrap_monitor(const Evolution& ev, double eps);

struct Interval {
  double lo = 0.0, hi = 0.0;
};

// Flatness check: the curvature source vanishes identically outside
// the compact diamond (u-support x v-support); curvature recomputed from psi
// second differences outside it is O(h^2).
DiagnosticsReport flatness_report(const Evolution& ev, const NullPair& np,
                                  const Interval& u_support, const Interval& v_support);

// Observed orders log2(e_k / e_{k+1}) for errors at h, h/2, h/4, ...
std::vector<double> observed_orders(const std::vector<double>& errors);

struct CompareResult {
  double sup = 0.0;
  double l1 = 0.0;
  long count = 0;  // nodes compared
};

// Bilinear interpolation of a lattice field (clamped to the lattice).
double eval_bilinear(const Field2D& f, double t, double r);

// Sup and L1 differences of two lattice fields over the intersection of
// their trusted regions, b interpolated bilinearly onto a's nodes.
CompareResult compare_solutions(const Field2D& a, const TrustedRegion& ta,
                                const Field2D& b, const TrustedRegion& tb);

}  // namespace minsurf
