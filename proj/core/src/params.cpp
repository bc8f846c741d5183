#include "opo/params.hpp"

#include "opo/errors.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <utility>

namespace opo {

void OpoParams::validate() const {
  const std::initializer_list<std::pair<const char*, double>> all = {
      {"gamma1", gamma1}, {"gamma2", gamma2}, {"delta1", delta1}, {"delta2", delta2},
      {"a1", a1},         {"a2", a2},         {"rho1", rho1},     {"rho2", rho2},
      {"a0", a0},         {"sigma", sigma}};
  for (const auto& [name, value] : all)
    if (!std::isfinite(value)) throw InvalidParams(std::string(name) + " must be finite");

  if (gamma1 <= 0.0) throw InvalidParams("gamma1 must be > 0");
  if (gamma2 <= 0.0) throw InvalidParams("gamma2 must be > 0");
  if (a1 <= 0.0) throw InvalidParams("a1 must be > 0");
  if (a2 <= 0.0) throw InvalidParams("a2 must be > 0");
  if (sigma <= 0.0) throw InvalidParams("sigma must be > 0");
  if (a0 < 0.0 || a0 >= 1.0) throw InvalidParams("a0 must satisfy 0 <= a0 < 1 (below threshold)");
}

std::string OpoParams::describe() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "gamma1=%.17g gamma2=%.17g delta1=%.17g delta2=%.17g a1=%.17g a2=%.17g "
                "rho1=%.17g rho2=%.17g a0=%.17g sigma=%.17g",
                gamma1, gamma2, delta1, delta2, a1, a2, rho1, rho2, a0, sigma);
  return buf;
}

} // namespace opo
