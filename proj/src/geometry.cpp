#include "minsurf/geometry.hpp"

namespace minsurf {

Field2D psi_wave_residual(const Field2D& psi, const Field2D& source) {
  if (psi.nt < 3 || psi.nr < 3)
    fail(ErrorKind::invalid_input, "psi_wave_residual: lattice must be at least 3x3");
  if (source.nt != psi.nt || source.nr != psi.nr)
    fail(ErrorKind::invalid_input, "psi_wave_residual: mismatched lattice shapes");
  Field2D res(psi.t0 + psi.dt, psi.r0 + psi.dr, psi.dt, psi.dr, psi.nt - 2, psi.nr - 2);
  const double idt2 = 1.0 / (psi.dt * psi.dt);
  const double idr2 = 1.0 / (psi.dr * psi.dr);
  for (int j = 1; j + 1 < psi.nt; ++j) {
    for (int i = 1; i + 1 < psi.nr; ++i) {
      const double prr = (psi.at(j, i + 1) - 2.0 * psi.at(j, i) + psi.at(j, i - 1)) * idr2;
      const double ptt = (psi.at(j + 1, i) - 2.0 * psi.at(j, i) + psi.at(j - 1, i)) * idt2;
      res.at(j - 1, i - 1) = prr - ptt - std::exp(-psi.at(j, i)) * source.at(j, i);
    }
  }
  return res;
}

}  // namespace minsurf
