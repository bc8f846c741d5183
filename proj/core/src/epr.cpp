#include "opo/epr.hpp"

#include "opo/errors.hpp"
#include "opo/parallel.hpp"

#include <cmath>
#include <numbers>

namespace opo {

namespace {

using std::numbers::pi;

void require_nonzero(TransverseMode k) {
  if (k.kx == 0.0 && k.ky == 0.0)
    throw DegenerateMode("k = (0,0): both detectors would see the same far-field mode");
}

// Transfer coefficients at the four (k, omega) sign combinations.
struct Corners {
  TransferCoeffs pp; // ( k,  w)
  TransferCoeffs pm; // ( k, -w)
  TransferCoeffs mp; // (-k,  w)
  TransferCoeffs mm; // (-k, -w)

  Corners(const OpoParams& p, TransverseMode k, double w)
      : pp(transfer_coeffs(p, k, w)), pm(transfer_coeffs(p, k, -w)), mp(transfer_coeffs(p, -k, w)),
        mm(transfer_coeffs(p, -k, -w)) {}
};

// The variance is sum_i |alpha_i - g* beta_i|^2; alpha carries the +k
// detector, beta the -k detector.
struct Amplitudes {
  cplx alpha[4];
  cplx beta[4];
};

Amplitudes amplitudes(const Corners& c, const PolQuadSelection& phi) {
  const double psi = phi.psi_a + phi.psi_b;
  const cplx ea = std::polar(1.0, psi + phi.gamma_a);
  const cplx eb = std::polar(1.0, psi + phi.gamma_b);
  const double ca = std::cos(phi.theta_a), sa = std::sin(phi.theta_a);
  const double cb = std::cos(phi.theta_b), sb = std::sin(phi.theta_b);
  Amplitudes a;
  a.alpha[0] = eb * ca * c.pp.u1;
  a.beta[0] = sb * std::conj(c.mm.v2);
  a.alpha[1] = -ca * std::conj(c.mp.v2);
  a.beta[1] = -eb * sb * c.pm.u1;
  a.alpha[2] = ea * sa * c.mm.u1;
  a.beta[2] = cb * std::conj(c.pp.v2);
  a.alpha[3] = -sa * std::conj(c.pm.v2);
  a.beta[3] = -ea * cb * c.mp.u1;
  return a;
}

PolQuadSelection momentum_pair(PolQuadSelection phi) {
  phi.psi_a += 0.5 * pi;
  phi.psi_b += 1.5 * pi;
  return phi;
}

} // namespace

double epr_variance(const OpoParams& p, TransverseMode k, double omega, const PolQuadSelection& phi,
                    cplx g) {
  require_nonzero(k);
  const Corners c(p, k, omega);
  const double psi = phi.psi_a + phi.psi_b;
  const cplx ea = std::polar(1.0, psi + phi.gamma_a);
  const cplx eb = std::polar(1.0, psi + phi.gamma_b);
  const double ca = std::cos(phi.theta_a), sa = std::sin(phi.theta_a);
  const double cb = std::cos(phi.theta_b), sb = std::sin(phi.theta_b);
  const cplx gc = std::conj(g);

  const double t1 = std::norm(eb * ca * c.pp.u1 - gc * sb * std::conj(c.mm.v2));
  const double t2 = std::norm(eb * gc * sb * c.pm.u1 - ca * std::conj(c.mp.v2));
  const double t3 = std::norm(ea * sa * c.mm.u1 - gc * cb * std::conj(c.pp.v2));
  const double t4 = std::norm(ea * gc * cb * c.mp.u1 - sa * std::conj(c.pm.v2));
  return p.sigma * (t1 + t2 + t3 + t4);
}

QuadratureSpectra quadrature_spectra(const OpoParams& p, TransverseMode k, double omega,
                                     const PolQuadSelection& phi) {
  require_nonzero(k);
  const Amplitudes a = amplitudes(Corners(p, k, omega), phi);
  QuadratureSpectra s;
  for (int i = 0; i < 4; ++i) {
    s.s_xx += std::norm(a.alpha[i]);
    s.s_yy += std::norm(a.beta[i]);
    s.s_yx += std::conj(a.alpha[i]) * a.beta[i];
  }
  s.s_xx *= p.sigma;
  s.s_yy *= p.sigma;
  s.s_yx *= p.sigma;
  return s;
}

cplx optimal_gain(const OpoParams& p, TransverseMode k, double omega, const PolQuadSelection& phi) {
  const QuadratureSpectra s = quadrature_spectra(p, k, omega, phi);
  if (!(s.s_yy > 0.0)) throw ZeroDenominator("spectrum of the -k component vanishes");
  return s.s_yx / s.s_yy;
}

cplx resolve_gain(const GainSetting& gain, const OpoParams& p, TransverseMode k, double omega,
                  const PolQuadSelection& phi) {
  if (std::holds_alternative<OptimalGain>(gain)) return optimal_gain(p, k, omega, phi);
  if (const auto* f = std::get_if<FixedGain>(&gain)) return f->g;
  return {1.0, 0.0};
}

EntanglementResult entanglement_predicate(const OpoParams& p, TransverseMode k, double omega,
                                          const PolQuadSelection& phi, const GainSetting& gain) {
  const PolQuadSelection mom = momentum_pair(phi);
  EntanglementResult r;
  r.position = epr_variance(p, k, omega, phi, resolve_gain(gain, p, k, omega, phi)) / p.sigma;
  r.momentum = epr_variance(p, k, omega, mom, resolve_gain(gain, p, k, omega, mom)) / p.sigma;
  r.entangled = r.position < 1.0 && r.momentum < 1.0;
  return r;
}

PolQuadSelection scheme_selection(DetectionScheme scheme, double psi_sum) noexcept {
  switch (scheme) {
  case DetectionScheme::vertical_bright:
    return {pi, 0.5 * pi, psi_sum, 0.0, pi, 0.0};
  case DetectionScheme::horizontal:
  case DetectionScheme::vertical_dark:
    break;
  }
  return {pi, 0.0, psi_sum, 0.0, 0.5 * pi, 0.0};
}

TransverseMode scheme_point(const OpoParams& p, DetectionScheme scheme) {
  const CriticalPoints cp = critical_points(p);
  if (scheme == DetectionScheme::horizontal) return cp.k_h;
  return {0.0, -cp.k_v.ky};
}

ScanGrid epr_scan(const OpoParams& p, DetectionScheme scheme, const GainSetting& gain,
                  const Axis& psi_sum, const Axis& omega, int threads) {
  ScanGrid grid(psi_sum, omega, "variance");
  const TransverseMode k = scheme_point(p, scheme);
  parallel_for(omega.count, threads, [&](int iy) {
    const double w = omega.value(iy);
    for (int ix = 0; ix < psi_sum.count; ++ix) {
      const PolQuadSelection phi = scheme_selection(scheme, psi_sum.value(ix));
      grid.at(ix, iy) = epr_variance(p, k, w, phi, resolve_gain(gain, p, k, w, phi)) / p.sigma;
    }
  });
  return grid;
}

PhaseOptimum optimal_phase(const OpoParams& p, DetectionScheme scheme, const GainSetting& gain,
                           double omega, double lo, double hi, int samples) {
  const TransverseMode k = scheme_point(p, scheme);
  auto value = [&](double psi) {
    const PolQuadSelection phi = scheme_selection(scheme, psi);
    return epr_variance(p, k, omega, phi, resolve_gain(gain, p, k, omega, phi)) / p.sigma;
  };
  const Axis axis{"psi_sum", lo, hi, std::max(samples, 3)};
  int best = 0;
  double best_v = value(axis.value(0));
  for (int i = 1; i < axis.count; ++i) {
    const double v = value(axis.value(i));
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  double a = axis.value(std::max(best - 1, 0));
  double b = axis.value(std::min(best + 1, axis.count - 1));
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = value(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = value(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = value(xm);
  if (fm < best_v) return {xm, fm};
  return {axis.value(best), best_v};
}

} // namespace opo
