#include "opo/quadrature.hpp"

#include <cmath>

namespace opo {

QuadratureSpec QuadratureSpec::defaults_for(const OpoParams& p) {
  QuadratureSpec q;
  q.omega_max = 50.0 * std::max(p.gamma1, p.gamma2);
  return q;
}

void QuadratureSpec::validate() const {
  if (!(omega_max > 0.0) || !std::isfinite(omega_max)) throw InvalidParams("omega_max must be > 0");
  if (!(rel_tol > 0.0)) throw InvalidParams("rel_tol must be > 0");
  if (!(abs_tol > 0.0)) throw InvalidParams("abs_tol must be > 0");
  if (max_intervals < 4) throw InvalidParams("max_intervals must be >= 4");
}

double tail_estimate(const OpoParams& p, double omega_max) noexcept {
  const double g = p.gamma1 * p.gamma2;
  return 8.0 * p.a0 * p.a0 * g * g / (3.0 * omega_max * omega_max * omega_max);
}

} // namespace opo
