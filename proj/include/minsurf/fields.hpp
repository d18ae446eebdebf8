#pragma once

#include <cmath>
#include <vector>

#include "minsurf/error.hpp"

namespace minsurf {

// Uniform 1D grid: x_i = origin + i*h, i = 0..count-1.
struct GridSpec1D {
  double origin = 0.0;
  double h = 1.0;
  int count = 2;

  GridSpec1D() = default;
  GridSpec1D(double origin_, double h_, int count_)
      : origin(origin_), h(h_), count(count_) {
    if (!(h > 0.0)) fail(ErrorKind::invalid_input, "GridSpec1D: spacing must be positive");
    if (count < 2) fail(ErrorKind::invalid_input, "GridSpec1D: need at least 2 samples");
  }

  double x(int i) const { return origin + i * h; }
  double xmax() const { return x(count - 1); }
  double extent() const { return (count - 1) * h; }
  bool same_as(const GridSpec1D& o, double tol = 1e-12) const {
    return count == o.count && std::abs(origin - o.origin) <= tol * std::max(1.0, std::abs(origin)) &&
           std::abs(h - o.h) <= tol * h;
  }
};

struct SampledFunction1D {
  GridSpec1D grid;
  std::vector<double> values;

  SampledFunction1D() = default;
  SampledFunction1D(GridSpec1D g, std::vector<double> v)
      : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.count)
      fail(ErrorKind::invalid_input, "SampledFunction1D: values length != grid.count");
    for (double y : values)
      if (!std::isfinite(y))
        fail(ErrorKind::invalid_input, "SampledFunction1D: non-finite sample");
  }

  int size() const { return grid.count; }
  double operator[](int i) const { return values[i]; }
};

// Second-order first derivative: centered in the interior, one-sided 3-point
// stencils at both ends. Exact on affine data everywhere.
SampledFunction1D derivative(const SampledFunction1D& f);

// Second-order second derivative (centered interior, 4-point one-sided ends).
SampledFunction1D second_derivative(const SampledFunction1D& f);

// Trapezoidal approximation of the integral of |f| over the grid extent.
double norm_l1(const SampledFunction1D& f);

// max_i |f_i|
double norm_linf(const SampledFunction1D& f);

// norm_l1(f) + norm_l1(f')
double norm_w11(const SampledFunction1D& f);

// Trapezoid of f (signed).
double integral(const SampledFunction1D& f);

// Evaluate f at arbitrary x. On-grid points (to 1e-9 cells) return the exact
// sample; interior points use 4-point Lagrange interpolation; points beyond
// the grid clamp to the end sample (constant extrapolation).
double eval(const SampledFunction1D& f, double x);

// Prefix trapezoid: F(x) = int_{x_0}^{x} f. Exact at nodes to the trapezoid
// rule, linear-interpolated within a cell.
class PrefixIntegral {
 public:
  explicit PrefixIntegral(const SampledFunction1D& f);
  double operator()(double x) const;

 private:
  SampledFunction1D f_;
  std::vector<double> prefix_;
};

}  // namespace minsurf
