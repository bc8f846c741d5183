#pragma once

#include "opo/model.hpp"
#include "opo/quadrature.hpp"

#include <vector>

namespace opo {

// Normal-ordered output moments at one (k, omega):
//   n1 = <A1^dag A1> = |V1|^2, n2 = |V2|^2, c12 = <A1(k,w) A2(-k,-w)>.
struct SecondMoments {
  double n1 = 0.0;
  double n2 = 0.0;
  cplx c12{};
};

SecondMoments second_moments(const OpoParams& p, TransverseMode k, double omega);

// Frequencies where spectra at k can peak: 0 and the Hopf frequencies of
// every pair that involves k or -k, in both signs.
std::vector<double> spectral_breakpoints(const OpoParams& p, TransverseMode k);

// sigma / (2 pi) * integral of |V1|^2 + |V2|^2 over all omega.
double farfield_intensity(const OpoParams& p, TransverseMode k, const QuadratureSpec& q);

// Spectrum of a single quadrature-polarization component at k; depends on
// the polarization angle theta only.
double local_quadrature_spectrum(const OpoParams& p, TransverseMode k, double omega, double theta);

} // namespace opo
