#include "opo/stokes.hpp"

#include "opo/correlators.hpp"
#include "opo/errors.hpp"
#include "opo/oracle.hpp"
#include "opo/parallel.hpp"

#include <cmath>
#include <numbers>

namespace opo {

namespace {

constexpr double inv_2pi = 1.0 / (2.0 * std::numbers::pi);

double self1(const TransferCoeffs& t) {
  return std::norm(t.u1) * std::norm(t.v1) + std::norm(t.u2) * std::norm(t.v2);
}

double self23(const TransferCoeffs& t) {
  return std::norm(t.u2) * std::norm(t.v1) + std::norm(t.u1) * std::norm(t.v2);
}

// a = (k, w), b = (-k, -w).
double twin1(const TransferCoeffs& a, const TransferCoeffs& b) {
  return -(std::norm(a.u1) * std::norm(b.v2) + std::norm(a.u2) * std::norm(b.v1));
}

double twin23(const TransferCoeffs& a, const TransferCoeffs& b) {
  return 2.0 * std::real(std::conj(a.u1) * b.u1 * std::conj(b.v2) * a.v2);
}

enum Slot : std::size_t {
  mean0_k, mean1_k, mean0_mk, mean1_mk,
  self1_k, self23_k, self1_mk, self23_mk,
  twin1_k, twin0_k, twin23_k,
  sup1, sup0, sup23, sup1_normal, sup0_normal, sup23_normal,
  slot_count
};

// Tolerances of cancelling sums are measured against a non-cancelling
// companion.
constexpr std::array<std::size_t, slot_count> reference = {
    mean0_k, mean0_k, mean0_mk, mean0_mk,
    self1_k, self23_k, self1_mk, self23_mk,
    self1_k, self1_k, self23_k,
    self1_k, self1_k, self23_k, self1_k, self1_k, self23_k};

using Row = std::array<double, slot_count>;

Row integrand_row(const OpoParams& p, TransverseMode k, double w) {
  const TransferCoeffs a = transfer_coeffs(p, k, w);
  const TransferCoeffs b = transfer_coeffs(p, -k, -w);
  const TransferCoeffs c = transfer_coeffs(p, -k, w);
  const SecondMoments m_a = second_moments(p, k, w);
  const SecondMoments m_b = second_moments(p, -k, -w);
  Row r{};
  r[mean0_k] = std::norm(a.v1) + std::norm(a.v2);
  r[mean1_k] = std::norm(a.v1) - std::norm(a.v2);
  r[mean0_mk] = std::norm(c.v1) + std::norm(c.v2);
  r[mean1_mk] = std::norm(c.v1) - std::norm(c.v2);
  r[self1_k] = self1(a);
  r[self23_k] = self23(a);
  r[self1_mk] = self1(c);
  r[self23_mk] = self23(c);
  r[twin1_k] = twin1(a, b);
  r[twin0_k] = std::norm(m_a.c12) + std::norm(m_b.c12);
  r[twin23_k] = twin23(a, b);
  r[sup1] = r[self1_k] + r[self1_mk] + 2.0 * r[twin1_k];
  r[sup0] = r[self1_k] + r[self1_mk] - 2.0 * r[twin0_k];
  r[sup23] = r[self23_k] + r[self23_mk] - 2.0 * r[twin23_k];
  const double shot = r[mean0_k] + r[mean0_mk];
  r[sup1_normal] = r[sup1] - shot;
  r[sup0_normal] = r[sup0] - shot;
  r[sup23_normal] = r[sup23] - shot;
  return r;
}

} // namespace

StokesIntegrands stokes_integrands(const OpoParams& p, TransverseMode k, double omega) {
  const TransferCoeffs a = transfer_coeffs(p, k, omega);
  const TransferCoeffs b = transfer_coeffs(p, -k, -omega);
  const SecondMoments m_a = second_moments(p, k, omega);
  const SecondMoments m_b = second_moments(p, -k, -omega);
  return {self1(a), self23(a), twin1(a, b), std::norm(m_a.c12) + std::norm(m_b.c12), twin23(a, b)};
}

StokesPoint stokes_point(const OpoParams& p, TransverseMode k, const QuadratureSpec& q) {
  StokesPoint out;
  if (p.a0 == 0.0) return out;

  auto f = [&](double w) {
    // Symmetrizing over +/- omega lets the sums D1, D0 cancel pointwise.
    Row a = integrand_row(p, k, w);
    const Row b = integrand_row(p, k, -w);
    for (std::size_t i = 0; i < slot_count; ++i) a[i] += b[i];
    return a;
  };
  const auto bp = spectral_breakpoints(p, k);
  const auto res = integrate<slot_count>(f, bp, q, Domain::positive_half, reference);
  const auto& v = res.value;

  const double s1 = p.sigma * inv_2pi;
  const double s2 = p.sigma * p.sigma * inv_2pi;
  out.means = {s1 * v[mean0_k], s1 * v[mean1_k], 0.0, 0.0};
  out.means_twin = {s1 * v[mean0_mk], s1 * v[mean1_mk], 0.0, 0.0};
  out.corr.g1_self = s2 * v[self1_k];
  out.corr.g23_self = s2 * v[self23_k];
  out.corr.g1_twin = s2 * v[twin1_k];
  out.corr.g23_twin = s2 * v[twin23_k];
  out.corr.shot = p.sigma * out.means.s0;
  out.sup.d1 = s2 * v[sup1];
  out.sup.d0 = s2 * v[sup0];
  out.sup.d23 = s2 * v[sup23];
  out.sup.d1_normal = s2 * v[sup1_normal];
  out.sup.d0_normal = s2 * v[sup0_normal];
  out.sup.d23_normal = s2 * v[sup23_normal];
  out.sup.shot = p.sigma * (out.means.s0 + out.means_twin.s0);
  return out;
}

StokesMeans stokes_means(const OpoParams& p, TransverseMode k, const QuadratureSpec& q) {
  if (p.a0 == 0.0) return {};
  auto f = [&](double w) {
    const TransferCoeffs t = transfer_coeffs(p, k, w);
    const double n1 = std::norm(t.v1), n2 = std::norm(t.v2);
    return std::array<double, 2>{n1 + n2, n1 - n2};
  };
  const auto bp = spectral_breakpoints(p, k);
  constexpr std::array<std::size_t, 2> ref = {0, 0};
  const auto r = integrate<2>(f, bp, q, Domain::real_line, ref);
  const double s = p.sigma * inv_2pi;
  return {s * r.value[0], s * r.value[1], 0.0, 0.0};
}

double polarization_degree(const OpoParams& p, TransverseMode k, const QuadratureSpec& q) {
  const StokesMeans m = stokes_means(p, k, q);
  if (m.s0 < dark_intensity) throw UndefinedPolarization("pixel is dark; polarization degree undefined");
  return std::abs(m.s1) / m.s0;
}

StokesCorrelations stokes_self_correlations(const OpoParams& p, TransverseMode k,
                                            const QuadratureSpec& q) {
  StokesCorrelations c = stokes_point(p, k, q).corr;
  c.g1_twin = 0.0;
  c.g23_twin = 0.0;
  return c;
}

StokesCorrelations stokes_twin_correlations(const OpoParams& p, TransverseMode k,
                                            const QuadratureSpec& q) {
  StokesCorrelations c = stokes_point(p, k, q).corr;
  c.g1_self = 0.0;
  c.g23_self = 0.0;
  return c;
}

SuperpositionVariances stokes_superposition_variances(const OpoParams& p, TransverseMode k,
                                                      const QuadratureSpec& q) {
  return stokes_point(p, k, q).sup;
}

CommutatorAverages commutator_average(const OpoParams& p, TransverseMode k) {
  // <S3> density: -i (<A1^dag A2> - <A2^dag A1>) at equal labels, evaluated
  // through the Wick engine rather than assumed.
  auto density = [&](TransverseMode q, double w) {
    const ModeLabel a1d{Field::signal, q, w, true}, a2{Field::idler, q, w, false};
    const ModeLabel a2d{Field::idler, q, w, true}, a1{Field::signal, q, w, false};
    const ModeLabel x[2] = {a1d, a2}, y[2] = {a2d, a1};
    const cplx v = cplx(0.0, -1.0) * (wick_moment(p, x) - wick_moment(p, y));
    return v.real();
  };
  const QuadratureSpec q = QuadratureSpec::defaults_for(p);
  auto f = [&](double w) { return std::array<double, 2>{density(k, w), density(-k, w)}; };
  const auto r = integrate<2>(f, spectral_breakpoints(p, k), q);
  const double s = p.sigma * inv_2pi;
  return {s * (r.value[0] - r.value[1]), s * r.value[0]};
}

ScanGrid stokes_map(const OpoParams& p, const QuadratureSpec& q, StokesMapQuantity quantity,
                    const Axis& kx, const Axis& ky, int threads) {
  static constexpr const char* names[] = {"s0", "s1", "p2", "g1_normal", "g23_normal", "d1_normal",
                                          "d23_normal"};
  ScanGrid grid(kx, ky, names[static_cast<int>(quantity)]);
  parallel_for(ky.count, threads, [&](int iy) {
    for (int ix = 0; ix < kx.count; ++ix) {
      const TransverseMode k{kx.value(ix), ky.value(iy)};
      double v = 0.0;
      if (quantity == StokesMapQuantity::s0 || quantity == StokesMapQuantity::s1 ||
          quantity == StokesMapQuantity::p2) {
        const StokesMeans m = stokes_means(p, k, q);
        if (quantity == StokesMapQuantity::s0) v = m.s0;
        else if (quantity == StokesMapQuantity::s1) v = m.s1;
        else v = m.s0 < dark_intensity ? std::nan("") : std::abs(m.s1) / m.s0;
      } else {
        const StokesPoint sp = stokes_point(p, k, q);
        const double shot1 = sp.corr.shot, shot2 = sp.sup.shot;
        switch (quantity) {
        case StokesMapQuantity::g1_normal: v = (sp.corr.g1_self - shot1) / shot1; break;
        case StokesMapQuantity::g23_normal: v = (sp.corr.g23_self - shot1) / shot1; break;
        case StokesMapQuantity::d1_normal: v = sp.sup.d1_normal / shot2; break;
        default: v = sp.sup.d23_normal / shot2; break;
        }
        if (!(shot1 > 0.0) || !(shot2 > 0.0)) v = std::nan("");
      }
      grid.at(ix, iy) = v;
    }
  });
  return grid;
}

} // namespace opo
