#pragma once

#include "opo/model.hpp"
#include "opo/quadrature.hpp"
#include "opo/scan_grid.hpp"

namespace opo {

// First moments of the Stokes operators in one pixel of area sigma.
struct StokesMeans {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
};

// Zero-frequency correlations, including the shot-noise part. Self entries
// pair the pixel at k with itself, twin entries pair k with -k.
struct StokesCorrelations {
  double g1_self = 0.0;
  double g23_self = 0.0;
  double g1_twin = 0.0;
  double g23_twin = 0.0;
  double shot = 0.0; // sigma <S0(k)>
};

// Variances of S_i(k) -/+ S_i(-k) at zero frequency. d1 uses the sum, d0 and
// d23 the difference. `shot` is sigma (<S0(k)> + <S0(-k)>); the *_normal
// fields have it subtracted.
struct SuperpositionVariances {
  double d1 = 0.0, d0 = 0.0, d23 = 0.0;
  double d1_normal = 0.0, d0_normal = 0.0, d23_normal = 0.0;
  double shot = 0.0;
};

// Per-frequency integrands at (k, omega) without the sigma^2 / 2 pi factor
// and without the omega -> -omega symmetrization used for integration.
struct StokesIntegrands {
  double g1_self = 0.0;
  double g23_self = 0.0;
  double g1_twin = 0.0;
  double g0_twin = 0.0;
  double g23_twin = 0.0;
};

// Threshold below which the pixel counts as dark for the polarization degree.
inline constexpr double dark_intensity = 1e-9;

StokesMeans stokes_means(const OpoParams& p, TransverseMode k, const QuadratureSpec& q);

// |<S1>| / <S0>; throws UndefinedPolarization in dark pixels.
double polarization_degree(const OpoParams& p, TransverseMode k, const QuadratureSpec& q);

StokesCorrelations stokes_self_correlations(const OpoParams& p, TransverseMode k,
                                            const QuadratureSpec& q);
StokesCorrelations stokes_twin_correlations(const OpoParams& p, TransverseMode k,
                                            const QuadratureSpec& q);
SuperpositionVariances stokes_superposition_variances(const OpoParams& p, TransverseMode k,
                                                      const QuadratureSpec& q);

StokesIntegrands stokes_integrands(const OpoParams& p, TransverseMode k, double omega);

struct CommutatorAverages {
  double twin_difference = 0.0; // <S3(k)> - <S3(-k)>
  double local_s3 = 0.0;        // <S3(k)>, right-hand side of the local bound
};

CommutatorAverages commutator_average(const OpoParams& p, TransverseMode k);

// Everything above for one pixel from a single vector quadrature.
struct StokesPoint {
  StokesMeans means;
  StokesMeans means_twin; // at -k
  StokesCorrelations corr;
  SuperpositionVariances sup;
};

StokesPoint stokes_point(const OpoParams& p, TransverseMode k, const QuadratureSpec& q);

enum class StokesMapQuantity { s0, s1, p2, g1_normal, g23_normal, d1_normal, d23_normal };

// Far-field map over (kx, ky). Normal-ordered quantities are divided by the
// matching shot noise (single pixel for g*, two pixels for d*); p2 is nan in
// dark pixels.
ScanGrid stokes_map(const OpoParams& p, const QuadratureSpec& q, StokesMapQuantity quantity,
                    const Axis& kx, const Axis& ky, int threads = 0);

} // namespace opo
