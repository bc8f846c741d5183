#include <opo/correlators.hpp>
#include <opo/oracle.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace opo;

TEST(SecondMoments, VacuumWithoutPump) {
  OpoParams p;
  p.a0 = 0.0;
  const auto m = second_moments(p, {0.3, 0.1}, 0.2);
  EXPECT_EQ(m.n1, 0.0);
  EXPECT_EQ(m.n2, 0.0);
  EXPECT_EQ(m.c12, cplx(0.0));
}

TEST(SecondMoments, ClosedFormAtCrossingPoint) {
  const auto m = second_moments(OpoParams{}, {0.5, 0.0}, 0.0);
  const double v = 2 * 0.99 / (1 - 0.99 * 0.99);
  EXPECT_NEAR(m.n1, v * v, 1e-7);
  EXPECT_NEAR(m.n1, 9899.750006, 1e-5);
}

TEST(SecondMoments, CrossSpectrumMagnitudeFromUnitarity) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> kd(-1.2, 1.2), wd(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const TransverseMode k{kd(rng), kd(rng)};
    const auto m = second_moments(OpoParams{}, k, wd(rng));
    EXPECT_NEAR(std::norm(m.c12), m.n1 * (1 + m.n1), 1e-8 * (1 + m.n1) * (1 + m.n1));
    EXPECT_GE(m.n1, 0.0);
    EXPECT_GE(m.n2, 0.0);
  }
}

TEST(SecondMoments, AgreesWithMonteCarlo) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> kd(-1.0, 1.0), wd(-2.0, 2.0), pump(0.0, 0.95);
  for (int i = 0; i < 20; ++i) {
    OpoParams p;
    p.a0 = pump(rng);
    p.rho2 = kd(rng) * 1.5;
    const TransverseMode k{kd(rng), kd(rng)};
    const double w = wd(rng);
    const auto m = second_moments(p, k, w);
    const auto mc = mc_second_moments(p, k, w, 100000, 1000 + i);
    EXPECT_LE(std::abs(mc.estimate.n1 - m.n1), 5 * mc.n1_se + 1e-15);
    EXPECT_LE(std::abs(mc.estimate.n2 - m.n2), 5 * mc.n2_se + 1e-15);
    EXPECT_LE(std::abs(mc.estimate.c12.real() - m.c12.real()), 5 * mc.c12_re_se + 1e-15);
    EXPECT_LE(std::abs(mc.estimate.c12.imag() - m.c12.imag()), 5 * mc.c12_im_se + 1e-15);
  }
}

TEST(SpectralBreakpoints, ContainZeroAndHopfFrequencies) {
  const OpoParams p;
  const TransverseMode k{0.0, 0.80901699437494745};
  const auto bp = spectral_breakpoints(p, k);
  EXPECT_NE(std::find(bp.begin(), bp.end(), 0.0), bp.end());
  const double wh = hopf_frequency(p, k);
  bool found = false;
  for (double b : bp) found |= std::abs(b - wh) < 1e-15;
  EXPECT_TRUE(found);
}

TEST(FarfieldIntensity, ZeroWithoutPump) {
  OpoParams p;
  p.a0 = 0.0;
  EXPECT_EQ(farfield_intensity(p, {0.5, 0.0}, QuadratureSpec::defaults_for(p)), 0.0);
}

TEST(FarfieldIntensity, EvenInKx) {
  const OpoParams p;
  const auto q = QuadratureSpec::defaults_for(p);
  for (auto [kx, ky] : {std::pair{0.3, 0.2}, {0.7, -0.5}, {0.5, 0.0}, {0.05, 0.8}})
    EXPECT_EQ(farfield_intensity(p, {kx, ky}, q), farfield_intensity(p, {-kx, ky}, q));
}

TEST(FarfieldIntensity, MatchesLowPumpPerturbation) {
  // To leading order in a0: |V1|^2 = 4 a0^2 / |(1 + i d1)(1 - i d2')|^2, a
  // product of two Lorentzians with closed-form integral.
  OpoParams p;
  p.a0 = 1e-3;
  const auto q = QuadratureSpec::defaults_for(p);
  const TransverseMode k{0.5, 0.0};
  // Both detunings reduce to -w and +w at k_H: |D|^2 = (1 + w^2)^2 and
  // int 4 a0^2 / (1 + w^2)^2 = 2 pi a0^2 for each field.
  const double expect = 1.0 / (2.0 * std::numbers::pi) * 2.0 * (2.0 * std::numbers::pi * p.a0 * p.a0);
  EXPECT_NEAR(farfield_intensity(p, k, q), expect, 1e-5 * expect);
}

TEST(FarfieldIntensity, ConvergesMonotonicallyWithTolerance) {
  const OpoParams p;
  QuadratureSpec q = QuadratureSpec::defaults_for(p);
  for (TransverseMode k : {TransverseMode{0.5, 0.0}, TransverseMode{0.0, 0.80901699437494745},
                           TransverseMode{0.3, -0.2}}) {
    q.rel_tol = 1e-6;
    const double coarse = farfield_intensity(p, k, q);
    q.rel_tol = 5e-7;
    const double fine = farfield_intensity(p, k, q);
    EXPECT_LT(std::abs(fine - coarse), 1e-6 * std::abs(fine));
  }
}

TEST(LocalQuadratureSpectrum, ShotNoiseWithoutPump) {
  OpoParams p;
  p.a0 = 0.0;
  p.sigma = 2.5;
  EXPECT_DOUBLE_EQ(local_quadrature_spectrum(p, {0.1, 0.2}, 0.3, 0.7), 2.5);
}

TEST(LocalQuadratureSpectrum, NeverBelowShotNoise) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> kd(-1.2, 1.2), wd(-3.0, 3.0), th(0.0, 3.2);
  const OpoParams p;
  for (int i = 0; i < 500; ++i)
    EXPECT_GE(local_quadrature_spectrum(p, {kd(rng), kd(rng)}, wd(rng), th(rng)), p.sigma);
}

TEST(LocalQuadratureSpectrum, ThetaIndependentOnKxAxisOnly) {
  const OpoParams p;
  for (double kx : {0.2, 0.5, 0.8}) {
    const double a = local_quadrature_spectrum(p, {kx, 0.0}, 0.1, 0.0);
    for (double th : {std::numbers::pi / 4, std::numbers::pi / 2})
      EXPECT_NEAR(local_quadrature_spectrum(p, {kx, 0.0}, 0.1, th), a, 1e-10 * a);
  }
  const TransverseMode off{0.0, 0.809};
  EXPECT_GT(std::abs(local_quadrature_spectrum(p, off, 0.1, 0.0) - local_quadrature_spectrum(p, off, 0.1, 1.5)),
            1.0);
}
