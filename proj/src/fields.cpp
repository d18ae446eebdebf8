#include "minsurf/fields.hpp"

#include <algorithm>
#include <cmath>

namespace minsurf {

SampledFunction1D derivative(const SampledFunction1D& f) {
  const int n = f.size();
  if (n < 3) fail(ErrorKind::invalid_input, "derivative: need at least 3 samples");
  const double h = f.grid.h;
  std::vector<double> d(n);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (int i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return SampledFunction1D(f.grid, std::move(d));
}

SampledFunction1D second_derivative(const SampledFunction1D& f) {
  const int n = f.size();
  if (n < 4) fail(ErrorKind::invalid_input, "second_derivative: need at least 4 samples");
  const double h2 = f.grid.h * f.grid.h;
  std::vector<double> d(n);
  d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
  for (int i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
  d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
  return SampledFunction1D(f.grid, std::move(d));
}

double norm_l1(const SampledFunction1D& f) {
  const int n = f.size();
  double s = 0.5 * (std::abs(f[0]) + std::abs(f[n - 1]));
  for (int i = 1; i + 1 < n; ++i) s += std::abs(f[i]);
  return s * f.grid.h;
}

double integral(const SampledFunction1D& f) {
  const int n = f.size();
  double s = 0.5 * (f[0] + f[n - 1]);
  for (int i = 1; i + 1 < n; ++i) s += f[i];
  return s * f.grid.h;
}

double norm_linf(const SampledFunction1D& f) {
  double m = 0.0;
  for (double y : f.values) m = std::max(m, std::abs(y));
  return m;
}

double norm_w11(const SampledFunction1D& f) {
  return norm_l1(f) + norm_l1(derivative(f));
}

double eval(const SampledFunction1D& f, double x) {
  const int n = f.size();
  const double a = (x - f.grid.origin) / f.grid.h;
  if (a <= 0.0) return f[0];
  if (a >= n - 1) return f[n - 1];
  const double r = std::round(a);
  if (std::abs(a - r) < 1e-9) return f[static_cast<int>(r)];
  if (n < 4) {  // linear fallback on tiny grids
    int i = static_cast<int>(std::floor(a));
    double s = a - i;
    return (1.0 - s) * f[i] + s * f[i + 1];
  }
  // 4-point Lagrange on nodes k..k+3 with a in [k+1, k+2]
  int k = static_cast<int>(std::floor(a)) - 1;
  k = std::clamp(k, 0, n - 4);
  const double s = a - k;  // in [1,2] generically
  const double w0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
  const double w1 = s * (s - 2.0) * (s - 3.0) / 2.0;
  const double w2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
  const double w3 = s * (s - 1.0) * (s - 2.0) / 6.0;
  return w0 * f[k] + w1 * f[k + 1] + w2 * f[k + 2] + w3 * f[k + 3];
}

PrefixIntegral::PrefixIntegral(const SampledFunction1D& f)
    : f_(f), prefix_(f.size(), 0.0) {
  for (int i = 1; i < f.size(); ++i)
    prefix_[i] = prefix_[i - 1] + 0.5 * f.grid.h * (f[i - 1] + f[i]);
}

double PrefixIntegral::operator()(double x) const {
  const int n = f_.size();
  const double a = (x - f_.grid.origin) / f_.grid.h;
  if (a <= 0.0) return 0.0;
  if (a >= n - 1) return prefix_[n - 1];
  const int i = static_cast<int>(std::floor(a));
  const double s = a - i;
  if (s < 1e-12) return prefix_[i];
  const double fx = (1.0 - s) * f_[i] + s * f_[i + 1];
  return prefix_[i] + 0.5 * s * f_.grid.h * (f_[i] + fx);
}

}  // namespace minsurf
