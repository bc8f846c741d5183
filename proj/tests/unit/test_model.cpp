#include <opo/errors.hpp>
#include <opo/model.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace opo;

namespace {

OpoParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.3, 2.0), det(-1.0, 0.5), walk(-1.5, 1.5), pump(0.0, 0.999);
  OpoParams p;
  p.gamma1 = pos(rng);
  p.gamma2 = pos(rng);
  p.delta1 = det(rng);
  p.delta2 = det(rng);
  p.a1 = pos(rng);
  p.a2 = pos(rng);
  p.rho1 = walk(rng);
  p.rho2 = walk(rng);
  p.a0 = pump(rng);
  return p;
}

} // namespace

TEST(EffectiveDetuning, VanishesAtCrossingPointForReferenceParams) {
  EXPECT_DOUBLE_EQ(effective_detuning(OpoParams{}, Field::signal, {0.5, 0.0}, 0.0), 0.0);
}

TEST(EffectiveDetuning, AllTermsVanishAtOrigin) {
  OpoParams p;
  p.delta1 = 0.0;
  p.a1 = 3.7;
  EXPECT_EQ(effective_detuning(p, Field::signal, {0.0, 0.0}, 0.0), 0.0);
}

TEST(EffectiveDetuning, IdlerOnYAxis) {
  EXPECT_NEAR(effective_detuning(OpoParams{}, Field::idler, {0.0, 0.80902}, 0.0), 1.21353, 1e-5);
}

TEST(EffectiveDetuning, FrequencyEntersDividedByLinewidth) {
  OpoParams p;
  p.gamma2 = 2.0;
  const double base = effective_detuning(p, Field::idler, {0.1, 0.2}, 0.0);
  EXPECT_DOUBLE_EQ(effective_detuning(p, Field::idler, {0.1, 0.2}, 0.6), base - 0.3);
}

TEST(TransferCoeffs, NoPumpIsPureReflection) {
  OpoParams p;
  p.a0 = 0.0;
  for (double w : {-1.0, 0.0, 0.7}) {
    const auto t = transfer_coeffs(p, {0.3, -0.4}, w);
    EXPECT_EQ(t.v1, cplx(0.0));
    EXPECT_EQ(t.v2, cplx(0.0));
    EXPECT_NEAR(std::abs(t.u1), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(t.u2), 1.0, 1e-15);
  }
}

TEST(TransferCoeffs, ClosedFormAtCrossingPoint) {
  const OpoParams p;
  const auto t = transfer_coeffs(p, {0.5, 0.0}, 0.0);
  const double a2 = p.a0 * p.a0;
  EXPECT_NEAR(t.u1.real(), (1 + a2) / (1 - a2), 1e-10);
  EXPECT_NEAR(t.v1.real(), 2 * p.a0 / (1 - a2), 1e-10);
  EXPECT_NEAR(t.u1.real(), 99.50251256, 1e-7);
  EXPECT_NEAR(t.v1.real(), 99.49748744, 1e-7);
  EXPECT_EQ(t.u1.imag(), 0.0);
  EXPECT_EQ(t.v1.imag(), 0.0);
}

TEST(TransferCoeffs, ThrowsAtThreshold) {
  OpoParams p;
  p.a0 = 1.0; // deliberately outside the validated range
  EXPECT_THROW(transfer_coeffs(p, {0.5, 0.0}, 0.0), DegenerateDenominator);
}

TEST(TransferCoeffs, IdentitiesOnRandomSamples) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> kd(-1.5, 1.5), wd(-4.0, 4.0);
  for (int i = 0; i < 2000; ++i) {
    const OpoParams p = random_params(rng);
    const TransverseMode k{kd(rng), kd(rng)};
    const double w = wd(rng);
    const auto a = transfer_coeffs(p, k, w);
    const auto b = transfer_coeffs(p, -k, -w);
    const double scale = 1.0 + std::norm(a.u1) + std::norm(a.u2);
    EXPECT_NEAR(std::norm(a.u1) - std::norm(a.v1), 1.0, 1e-14 * scale);
    EXPECT_NEAR(std::norm(a.u2) - std::norm(a.v2), 1.0, 1e-14 * scale);
    EXPECT_LT(std::abs(a.u1 * b.v2 - a.v1 * b.u2), 1e-12 * (1.0 + std::abs(a.u1 * b.v2)));
    EXPECT_NEAR(std::abs(a.v1), std::abs(b.v2), 1e-12 * (1.0 + std::abs(a.v1)));
    EXPECT_NEAR(std::abs(a.u1), std::abs(b.u2), 1e-12 * (1.0 + std::abs(a.u1)));
  }
}

TEST(TransferCoeffs, ReflectionSymmetryOnKxAxisIsExact) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> kd(-1.5, 1.5), wd(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const OpoParams p = random_params(rng);
    const double kx = kd(rng), w = wd(rng);
    const auto a = transfer_coeffs(p, {kx, 0.0}, w);
    const auto b = transfer_coeffs(p, {-kx, 0.0}, w);
    EXPECT_EQ(a.u1, b.u1);
    EXPECT_EQ(a.v1, b.v1);
    EXPECT_EQ(a.u2, b.u2);
    EXPECT_EQ(a.v2, b.v2);
  }
}

TEST(TransferCoeffs, CouplingVanishesWithPump) {
  OpoParams p;
  double prev = HUGE_VAL;
  for (double a0 : {0.5, 0.1, 0.01, 0.001}) {
    p.a0 = a0;
    const double v = std::abs(transfer_coeffs(p, {0.2, 0.3}, 0.4).v1);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(prev, 1e-2);
}

TEST(HopfFrequency, ZeroAtCrossingPoint) {
  EXPECT_EQ(hopf_frequency(OpoParams{}, {0.5, 0.0}), 0.0);
}

TEST(HopfFrequency, ExternalPoint) {
  EXPECT_NEAR(hopf_frequency(OpoParams{}, {0.0, 0.80902}), 0.40451, 1e-5);
  EXPECT_NEAR(hopf_frequency(OpoParams{}, {0.0, -0.80902}), -0.40451, 1e-5);
}

TEST(HopfFrequency, IdlerVariantMirrorsSignal) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> kd(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const OpoParams p = random_params(rng);
    const TransverseMode k{kd(rng), kd(rng)};
    EXPECT_NEAR(hopf_frequency(p, Field::idler, k), -hopf_frequency(p, -k), 1e-14);
  }
}

TEST(HopfFrequency, ZeroOnKxAxisForSymmetricFields) {
  OpoParams p;
  p.rho1 = 0.4;
  p.rho2 = 1.3;
  p.gamma2 = 2.0;
  for (double kx : {0.1, 0.5, 0.9}) EXPECT_EQ(hopf_frequency(p, {kx, 0.0}), 0.0);
}

TEST(HopfFrequency, PairDenominatorResonatesAtThreshold) {
  // At a0 -> 1 the pair denominator is smallest exactly at the Hopf
  // frequency of a critical mode.
  OpoParams p;
  p.a0 = 0.9999;
  const TransverseMode k{0.0, 0.80901699437494745};
  const double wh = hopf_frequency(p, k);
  const double at = std::abs(transfer_coeffs(p, k, wh).v1);
  EXPECT_GT(at, std::abs(transfer_coeffs(p, k, wh + 0.01).v1));
  EXPECT_GT(at, std::abs(transfer_coeffs(p, k, wh - 0.01).v1));
}

TEST(CriticalPoints, ReferenceGeometry) {
  const auto cp = critical_points(OpoParams{});
  EXPECT_EQ(cp.k_h.kx, 0.5);
  EXPECT_EQ(cp.k_h.ky, 0.0);
  EXPECT_EQ(cp.k_v.kx, 0.0);
  EXPECT_NEAR(cp.k_v.ky, (1.0 + std::sqrt(5.0)) / 4.0, 1e-15);
  EXPECT_NEAR(cp.ky_plus, 0.809017, 1e-6);
  EXPECT_NEAR(cp.ky_minus, 0.309017, 1e-6);
}

TEST(CriticalPoints, PointsLieOnTheirRings) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    OpoParams p = random_params(rng);
    p.delta1 = -std::abs(p.delta1) - 0.01;
    p.delta2 = -std::abs(p.delta2);
    const auto cp = critical_points(p);
    EXPECT_LT(std::abs(ring_residual(p, cp.k_h, RingBranch::plus)), 1e-9);
    EXPECT_LT(std::abs(ring_residual(p, cp.k_h, RingBranch::minus)), 1e-9);
    EXPECT_LT(std::abs(ring_residual(p, {0.0, cp.ky_plus}, RingBranch::plus)), 1e-9);
    EXPECT_LT(std::abs(ring_residual(p, {0.0, cp.ky_minus}, RingBranch::minus)), 1e-9);
    EXPECT_GT(cp.ky_plus, 0.0);
    EXPECT_GT(cp.ky_minus, 0.0);
  }
}

TEST(CriticalPoints, SingleRingWithoutRelativeWalkoff) {
  OpoParams p;
  p.rho1 = 0.7;
  p.rho2 = 0.7;
  const auto cp = critical_points(p);
  EXPECT_DOUBLE_EQ(cp.ky_plus, cp.k_h.kx);
  EXPECT_DOUBLE_EQ(cp.ky_minus, cp.k_h.kx);
}

TEST(CriticalPoints, PositiveTotalDetuningHasNoRings) {
  OpoParams p;
  p.delta1 = 0.3;
  p.delta2 = 0.1;
  EXPECT_THROW(critical_points(p), NoInstability);
}

TEST(RingResidual, ReferenceValues) {
  const OpoParams p;
  EXPECT_EQ(ring_residual(p, {0.5, 0.0}, RingBranch::plus), 0.0);
  EXPECT_EQ(ring_residual(p, {0.5, 0.0}, RingBranch::minus), 0.0);
  EXPECT_DOUBLE_EQ(ring_residual(p, {0.0, 0.0}, RingBranch::plus), -0.5);
  // The signal ring passes through (0, +0.809) and (0, -0.309); the idler
  // ring is its mirror image.
  EXPECT_NEAR(ring_residual(p, {0.0, 0.809017}, RingBranch::plus), 0.0, 2e-6);
  EXPECT_NEAR(ring_residual(p, {0.0, -0.809017}, RingBranch::minus), 0.0, 2e-6);
  EXPECT_NEAR(ring_residual(p, {0.0, 0.309017}, RingBranch::minus), 0.0, 2e-6);
  EXPECT_GT(std::abs(ring_residual(p, {0.0, 0.809017}, RingBranch::minus)), 1.0);
}

TEST(RingResidual, SignalRingIsWhereSignalDetuningResonates) {
  // On the + ring the signal pair denominator reaches zero at threshold.
  OpoParams p;
  p.a0 = 1.0;
  const TransverseMode k{0.0, 0.80901699437494745};
  EXPECT_THROW(transfer_coeffs(p, k, hopf_frequency(p, k)), DegenerateDenominator);
}

TEST(OpoParams, ValidationRejectsViolations) {
  EXPECT_NO_THROW(OpoParams{}.validate());
  auto bad = [](auto mutate) {
    OpoParams p;
    mutate(p);
    return p;
  };
  EXPECT_THROW(bad([](OpoParams& p) { p.a0 = 1.0; }).validate(), InvalidParams);
  EXPECT_THROW(bad([](OpoParams& p) { p.a0 = -0.1; }).validate(), InvalidParams);
  EXPECT_THROW(bad([](OpoParams& p) { p.gamma2 = 0.0; }).validate(), InvalidParams);
  EXPECT_THROW(bad([](OpoParams& p) { p.a1 = -1.0; }).validate(), InvalidParams);
  EXPECT_THROW(bad([](OpoParams& p) { p.sigma = 0.0; }).validate(), InvalidParams);
  EXPECT_THROW(bad([](OpoParams& p) { p.rho2 = std::nan(""); }).validate(), InvalidParams);
}
