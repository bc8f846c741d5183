#include "opo/validation.hpp"

#include "opo/correlators.hpp"
#include "opo/epr.hpp"
#include "opo/errors.hpp"
#include "opo/oracle.hpp"
#include "opo/stokes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace opo {

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
  case CheckStatus::pass: return "pass";
  case CheckStatus::fail: return "fail";
  case CheckStatus::skip: return "skip";
  }
  return "?";
}

namespace {

struct Sample {
  TransverseMode k;
  double omega;
};

std::vector<Sample> draw(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> kd(-1.2, 1.2), wd(-3.0, 3.0);
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < n) {
    Sample s{{kd(rng), kd(rng)}, wd(rng)};
    if (std::abs(s.omega) < 1e-3 || s.k.norm2() < 1e-4) continue;
    out.push_back(s);
  }
  return out;
}

CheckResult worst_of(std::string name, double bound, const std::vector<Sample>& pts,
                     const std::function<double(const Sample&)>& deviation) {
  double worst = 0.0;
  for (const auto& s : pts) worst = std::max(worst, deviation(s));
  return {std::move(name), worst <= bound ? CheckStatus::pass : CheckStatus::fail, worst, bound};
}

} // namespace

std::vector<CheckResult> run_validation(const OpoParams& p, const QuadratureSpec& q,
                                        const ValidationOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const auto pts = draw(rng, opts.random_points);
  std::vector<CheckResult> out;

  out.push_back(worst_of("unitarity", 1e-10, pts, [&](const Sample& s) {
    const TransferCoeffs t = transfer_coeffs(p, s.k, s.omega);
    return std::max(std::abs(std::norm(t.u1) - std::norm(t.v1) - 1.0),
                    std::abs(std::norm(t.u2) - std::norm(t.v2) - 1.0));
  }));

  out.push_back(worst_of("cross_relation", 1e-10, pts, [&](const Sample& s) {
    const TransferCoeffs a = transfer_coeffs(p, s.k, s.omega);
    const TransferCoeffs b = transfer_coeffs(p, -s.k, -s.omega);
    return std::abs(a.u1 * b.v2 - a.v1 * b.u2) / (1.0 + std::abs(a.u1 * b.v2));
  }));

  out.push_back(worst_of("magnitude_pairing", 1e-10, pts, [&](const Sample& s) {
    const TransferCoeffs a = transfer_coeffs(p, s.k, s.omega);
    const TransferCoeffs b = transfer_coeffs(p, -s.k, -s.omega);
    return std::max(std::abs(std::abs(a.v1) - std::abs(b.v2)), std::abs(std::abs(a.u1) - std::abs(b.u2))) /
           (1.0 + std::abs(a.u1));
  }));

  try {
    const CriticalPoints cp = critical_points(p);
    const double r = std::max({std::abs(ring_residual(p, cp.k_h, RingBranch::plus)),
                               std::abs(ring_residual(p, cp.k_h, RingBranch::minus)),
                               std::abs(ring_residual(p, {0.0, cp.ky_plus}, RingBranch::plus)),
                               std::abs(ring_residual(p, {0.0, cp.ky_minus}, RingBranch::minus))});
    out.push_back({"critical_points_on_rings", r <= 1e-9 ? CheckStatus::pass : CheckStatus::fail, r, 1e-9});
  } catch (const NoInstability&) {
    out.push_back({"critical_points_on_rings", CheckStatus::skip, 0.0, 1e-9});
  }

  out.push_back(worst_of("wick_second_moments", 1e-12, pts, [&](const Sample& s) {
    const SecondMoments m = second_moments(p, s.k, s.omega);
    const ModeLabel a1{Field::signal, s.k, s.omega, false};
    const ModeLabel a2{Field::idler, s.k, s.omega, false};
    const ModeLabel b2{Field::idler, -s.k, -s.omega, false};
    const ModeLabel n1[2] = {a1.adjoint(), a1}, n2[2] = {a2.adjoint(), a2}, c[2] = {a1, b2};
    const double scale = 1.0 + m.n1 + m.n2;
    return std::max({std::abs(wick_moment(p, n1) - m.n1), std::abs(wick_moment(p, n2) - m.n2),
                     std::abs(wick_moment(p, c) - m.c12)}) /
           scale;
  }));

  {
    double worst = 0.0;
    std::uint64_t seed = opts.seed;
    for (const auto& s : pts) {
      const SecondMoments m = second_moments(p, s.k, s.omega);
      const McSecondMoments mc = mc_second_moments(p, s.k, s.omega, opts.mc_samples, ++seed);
      // Deviation in units of the standard error; a zero SE only occurs
      // for exact agreement (vacuum), where the deviation is zero too.
      auto z = [](double d, double se) { return se > 0.0 ? std::abs(d) / se : (d == 0.0 ? 0.0 : HUGE_VAL); };
      worst = std::max({worst, z(mc.estimate.n1 - m.n1, mc.n1_se), z(mc.estimate.n2 - m.n2, mc.n2_se),
                        z(mc.estimate.c12.real() - m.c12.real(), mc.c12_re_se),
                        z(mc.estimate.c12.imag() - m.c12.imag(), mc.c12_im_se)});
    }
    out.push_back({"monte_carlo_second_moments", worst <= 5.0 ? CheckStatus::pass : CheckStatus::fail, worst, 5.0});
  }

  out.push_back(worst_of("local_spectrum_above_shot_noise", 0.0, pts, [&](const Sample& s) {
    return std::max(0.0, p.sigma - local_quadrature_spectrum(p, s.k, s.omega, s.k.kx + s.omega));
  }));

  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::vector<PolQuadSelection> phis;
  for (std::size_t i = 0; i < pts.size(); ++i)
    phis.push_back({ang(rng), ang(rng), ang(rng), ang(rng), ang(rng), ang(rng)});

  {
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto r = entanglement_predicate(p, pts[i].k, pts[i].omega, phis[i], UnitGain{});
      worst = std::max(worst, std::abs(r.position - r.momentum) / std::max(1.0, r.position));
    }
    out.push_back({"position_momentum_equality", worst <= 1e-10 ? CheckStatus::pass : CheckStatus::fail, worst, 1e-10});
  }

  {
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& s = pts[i];
      const cplx g = optimal_gain(p, s.k, s.omega, phis[i]);
      const double at_opt = epr_variance(p, s.k, s.omega, phis[i], g);
      for (cplx trial : {cplx(1.0, 0.0), cplx(0.0, 0.0), g * 1.01, g + cplx(0.0, 1e-3)})
        worst = std::max(worst, (at_opt - epr_variance(p, s.k, s.omega, phis[i], trial)) / p.sigma);
    }
    out.push_back({"optimal_gain_minimizes", worst <= 1e-12 ? CheckStatus::pass : CheckStatus::fail,
                   std::max(worst, 0.0), 1e-12});
  }

  {
    // Stokes zeros at a handful of points; quadrature dominates the cost.
    const std::size_t n = std::min<std::size_t>(pts.size(), 4);
    double d1 = 0.0, twin = 0.0, d23 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const StokesPoint sp = stokes_point(p, pts[i].k, q);
      const double scale = std::max(sp.sup.shot, q.abs_tol);
      d1 = std::max(d1, std::abs(sp.sup.d1) / scale);
      twin = std::max(twin, std::abs(sp.corr.g1_twin + sp.corr.g1_self) / scale);
      const StokesPoint line = stokes_point(p, {pts[i].k.kx, 0.0}, q);
      d23 = std::max(d23, std::abs(line.sup.d23) / std::max(line.sup.shot, q.abs_tol));
    }
    out.push_back({"stokes_sum_noise_vanishes", d1 <= 1e-8 ? CheckStatus::pass : CheckStatus::fail, d1, 1e-8});
    out.push_back({"stokes_twin_anticorrelation", twin <= 1e-8 ? CheckStatus::pass : CheckStatus::fail, twin, 1e-8});
    out.push_back({"stokes_d23_zero_on_kx_axis", d23 <= 1e-8 ? CheckStatus::pass : CheckStatus::fail, d23, 1e-8});
  }

  return out;
}

} // namespace opo
