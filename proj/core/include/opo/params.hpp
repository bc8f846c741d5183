#pragma once

#include <string>

namespace opo {

enum class Field { signal = 1, idler = 2 };

constexpr Field partner(Field f) noexcept {
  return f == Field::signal ? Field::idler : Field::signal;
}

constexpr int index(Field f) noexcept { return static_cast<int>(f); }

struct TransverseMode {
  double kx = 0.0;
  double ky = 0.0;

  constexpr TransverseMode operator-() const noexcept { return {-kx, -ky}; }
  constexpr double norm2() const noexcept { return kx * kx + ky * ky; }
  friend constexpr bool operator==(const TransverseMode&, const TransverseMode&) = default;
};

/// Physical constants of the below-threshold model. Defaults reproduce the
/// reference configuration used throughout the figures.
struct OpoParams {
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double delta1 = -0.25;
  double delta2 = -0.25;
  double a1 = 1.0;
  double a2 = 1.0;
  double rho1 = 0.0;
  double rho2 = 1.0;
  double a0 = 0.99;
  double sigma = 1.0;

  double gamma(Field f) const noexcept { return f == Field::signal ? gamma1 : gamma2; }
  double delta(Field f) const noexcept { return f == Field::signal ? delta1 : delta2; }
  double diffraction(Field f) const noexcept { return f == Field::signal ? a1 : a2; }
  double walkoff(Field f) const noexcept { return f == Field::signal ? rho1 : rho2; }

  // Throws InvalidParams naming the first violated invariant.
  void validate() const;

  // Compact `key=value` rendering used in CSV metadata headers.
  std::string describe() const;
};

} // namespace opo
