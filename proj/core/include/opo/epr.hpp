#pragma once

#include "opo/model.hpp"
#include "opo/scan_grid.hpp"

#include <variant>

namespace opo {

// Retarder phase, polarizer angle and homodyne phase for the detector at +k
// (suffix a) and at -k (suffix b).
struct PolQuadSelection {
  double gamma_a = 0.0, theta_a = 0.0, psi_a = 0.0;
  double gamma_b = 0.0, theta_b = 0.0, psi_b = 0.0;
};

struct UnitGain {};
struct OptimalGain {};
struct FixedGain {
  cplx g{1.0, 0.0};
};
using GainSetting = std::variant<UnitGain, OptimalGain, FixedGain>;

enum class DetectionScheme { horizontal, vertical_bright, vertical_dark };

// Spectra of X (component a at +k) and Y (component b at -k):
//   V(g) = s_xx - 2 Re(g conj(s_yx)) + |g|^2 s_yy.
struct QuadratureSpectra {
  double s_xx = 0.0;
  double s_yy = 0.0;
  cplx s_yx{};
};

// Spectral variance of X - g* Y in the four-term closed form. The shot-noise
// level is sigma (1 + |g|^2); EPR correlation needs a value below sigma.
// Throws DegenerateMode at k = 0.
double epr_variance(const OpoParams& p, TransverseMode k, double omega, const PolQuadSelection& phi,
                    cplx g);

QuadratureSpectra quadrature_spectra(const OpoParams& p, TransverseMode k, double omega,
                                     const PolQuadSelection& phi);

// s_yx / s_yy. Throws ZeroDenominator if s_yy vanishes.
cplx optimal_gain(const OpoParams& p, TransverseMode k, double omega, const PolQuadSelection& phi);

cplx resolve_gain(const GainSetting& gain, const OpoParams& p, TransverseMode k, double omega,
                  const PolQuadSelection& phi);

struct EntanglementResult {
  bool entangled = false;
  double position = 0.0; // V / sigma for X - g* Y
  double momentum = 0.0; // V / sigma for the pair shifted by pi/2, summed
};

// `phi` selects the position pair. The momentum pair advances both
// homodyne phases by pi/2 and flips the sign of Y. With OptimalGain each
// pair gets its own gain.
EntanglementResult entanglement_predicate(const OpoParams& p, TransverseMode k, double omega,
                                          const PolQuadSelection& phi, const GainSetting& gain);

// Angle assignment of a scheme with psi_a = psi_sum and psi_b = 0.
PolQuadSelection scheme_selection(DetectionScheme scheme, double psi_sum) noexcept;

// Detection point used as "+k" for a scheme: the crossing point (k_c, 0) for
// the horizontal scheme; the external point of the idler ring, (0, -k_ext),
// for the vertical ones. The twin detector sits at the opposite point.
TransverseMode scheme_point(const OpoParams& p, DetectionScheme scheme);

// Rows are omega, columns psi_sum; values are V / sigma.
ScanGrid epr_scan(const OpoParams& p, DetectionScheme scheme, const GainSetting& gain,
                  const Axis& psi_sum, const Axis& omega, int threads = 0);

struct PhaseOptimum {
  double psi_sum = 0.0;
  double value = 0.0; // V / sigma
};

// Minimizes V / sigma over psi_sum in [lo, hi] at fixed omega: dense sampling
// followed by golden-section refinement around the best sample.
PhaseOptimum optimal_phase(const OpoParams& p, DetectionScheme scheme, const GainSetting& gain,
                           double omega, double lo, double hi, int samples = 721);

} // namespace opo
