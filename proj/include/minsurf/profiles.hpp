#pragma once

#include <string>

#include "minsurf/fields.hpp"

namespace minsurf {

// Analytic profile descriptor. Textual forms:
//   zero
//   constant(value=0.1)
//   gaussian(a=0.1, sigma=1, center=0)
//   compact-bump(a=0.1, sigma=1, lo=-1, hi=1)   (alias: bump)
//   file(path=lambda0.csv)
// compact-bump is a gaussian multiplied by a smooth cutoff; it is identically
// zero for x outside (lo, hi).
struct ProfileSpec {
  enum class Kind { zero, constant, gaussian, compact_bump, file };
  Kind kind = Kind::zero;
  double a = 1.0;
  double sigma = 1.0;
  double center = 0.0;
  double lo = -1.0;
  double hi = 1.0;
  double value = 0.0;
  std::string path;

  static ProfileSpec parse(const std::string& text);
  std::string str() const;

  // Pointwise evaluation; valid for all kinds except file.
  double operator()(double x) const;
};

SampledFunction1D sample(const ProfileSpec& spec, const GridSpec1D& grid);

}  // namespace minsurf
