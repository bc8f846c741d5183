#include "opo/model.hpp"

#include "opo/errors.hpp"

#include <algorithm>
#include <cmath>

namespace opo {

double effective_detuning(const OpoParams& p, Field j, TransverseMode k, double omega) noexcept {
  return p.delta(j) + p.diffraction(j) * k.norm2() + p.walkoff(j) * k.ky - omega / p.gamma(j);
}

namespace {

// Coefficients for the pair (field j at (k,w), partner at (-k,-w)). Written
// as [(1 - i d)(1 - i d') + a0^2] / D rather than 2(1 - i d')/D - 1, which
// loses digits once |U| grows large near threshold.
void pair_coeffs(const OpoParams& p, Field j, TransverseMode k, double omega, cplx& u, cplx& v) {
  const double d = effective_detuning(p, j, k, omega);
  const double dp = effective_detuning(p, partner(j), -k, -omega);
  const double a2 = p.a0 * p.a0;
  const cplx den = cplx(1.0, d) * cplx(1.0, -dp) - a2;
  if (std::abs(den) < denominator_epsilon)
    throw DegenerateDenominator("transfer-coefficient denominator vanishes (threshold reached)");
  u = (cplx(1.0, -d) * cplx(1.0, -dp) + a2) / den;
  v = 2.0 * p.a0 / den;
}

} // namespace

TransferCoeffs transfer_coeffs(const OpoParams& p, TransverseMode k, double omega) {
  TransferCoeffs t;
  pair_coeffs(p, Field::signal, k, omega, t.u1, t.v1);
  pair_coeffs(p, Field::idler, k, omega, t.u2, t.v2);
  return t;
}

double hopf_frequency(const OpoParams& p, TransverseMode k) noexcept {
  return hopf_frequency(p, Field::signal, k);
}

double hopf_frequency(const OpoParams& p, Field j, TransverseMode k) noexcept {
  const Field o = partner(j);
  const double g = p.gamma(j), go = p.gamma(o);
  const double bracket = p.delta(j) - p.delta(o) + (p.diffraction(j) - p.diffraction(o)) * k.norm2() +
                         (p.walkoff(j) + p.walkoff(o)) * k.ky;
  return g * go / (g + go) * bracket;
}

namespace {

struct RingCoeffs {
  double a, b, c;
};

RingCoeffs ring_coeffs(const OpoParams& p) noexcept {
  return {p.gamma1 * p.a1 + p.gamma2 * p.a2, p.gamma1 * p.rho1 - p.gamma2 * p.rho2,
          p.gamma1 * p.delta1 + p.gamma2 * p.delta2};
}

} // namespace

double ring_residual(const OpoParams& p, TransverseMode k, RingBranch branch) noexcept {
  const auto [a, b, c] = ring_coeffs(p);
  const double s = branch == RingBranch::plus ? 1.0 : -1.0;
  return c + a * k.norm2() + s * b * k.ky;
}

CriticalPoints critical_points(const OpoParams& p) {
  const auto [a, b, c] = ring_coeffs(p);
  if (c >= 0.0)
    throw NoInstability("total detuning gamma1*delta1 + gamma2*delta2 must be negative");
  const double radicand = b * b - 4.0 * a * c;
  if (radicand < 0.0) throw NoInstability("ring equation has no real y-axis intersection");

  // Both branches have one positive root on the k_y axis; the quadratic
  // a ky^2 + s b ky + c = 0 has c < 0, so the sign of sqrt picks it.
  const double sq = std::sqrt(radicand);
  CriticalPoints cp;
  cp.k_h = {std::sqrt(-c / a), 0.0};
  cp.ky_plus = (-b + sq) / (2.0 * a);
  cp.ky_minus = (b + sq) / (2.0 * a);
  cp.k_v = {0.0, std::max(cp.ky_plus, cp.ky_minus)};
  return cp;
}

} // namespace opo
