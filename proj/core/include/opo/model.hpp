#pragma once

#include "opo/params.hpp"

#include <complex>

namespace opo {

using cplx = std::complex<double>;

inline constexpr double denominator_epsilon = 1e-12;

struct TransferCoeffs {
  cplx u1, v1, u2, v2;
};

enum class RingBranch { plus, minus };

struct CriticalPoints {
  TransverseMode k_h;
  TransverseMode k_v;
  double ky_plus = 0.0;
  double ky_minus = 0.0;
};

// Delta_j + a_j |k|^2 + rho_j k_y - omega / gamma_j
double effective_detuning(const OpoParams& p, Field j, TransverseMode k, double omega) noexcept;

// Throws DegenerateDenominator when either pair denominator is below
// denominator_epsilon in magnitude.
TransferCoeffs transfer_coeffs(const OpoParams& p, TransverseMode k, double omega);

// Frequency at which the (signal at k, idler at -k) pair becomes undamped.
double hopf_frequency(const OpoParams& p, TransverseMode k) noexcept;

// Same for the pair whose annihilated field is `j` at k. The signal variant
// equals hopf_frequency(p, k); the idler variant is -hopf_frequency(p, -k).
double hopf_frequency(const OpoParams& p, Field j, TransverseMode k) noexcept;

// C + A|k|^2 +/- B k_y with A = g1 a1 + g2 a2, B = g1 rho1 - g2 rho2,
// C = g1 Delta1 + g2 Delta2. The plus branch is the signal ring.
double ring_residual(const OpoParams& p, TransverseMode k, RingBranch branch) noexcept;

// Throws NoInstability when no critical ring exists.
CriticalPoints critical_points(const OpoParams& p);

} // namespace opo
