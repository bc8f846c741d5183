#include <opo/correlators.hpp>
#include <opo/epr.hpp>
#include <opo/oracle.hpp>
#include <opo/stokes.hpp>

#include <benchmark/benchmark.h>

#include <array>
#include <numbers>

namespace {

const opo::OpoParams ref;

void BM_TransferCoeffs(benchmark::State& state) {
  double w = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(opo::transfer_coeffs(ref, {0.3, -0.4}, w));
    w += 1e-6;
  }
}
BENCHMARK(BM_TransferCoeffs);

void BM_FarfieldIntensity(benchmark::State& state) {
  const opo::QuadratureSpec q = opo::QuadratureSpec::defaults_for(ref);
  for (auto _ : state) benchmark::DoNotOptimize(opo::farfield_intensity(ref, {0.5, 0.01}, q));
}
BENCHMARK(BM_FarfieldIntensity);

void BM_EprVariance(benchmark::State& state) {
  const auto phi = opo::scheme_selection(opo::DetectionScheme::vertical_dark, 0.8);
  const opo::TransverseMode k = opo::scheme_point(ref, opo::DetectionScheme::vertical_dark);
  for (auto _ : state) benchmark::DoNotOptimize(opo::epr_variance(ref, k, 0.1, phi, 1.0));
}
BENCHMARK(BM_EprVariance);

void BM_EprScanDefaultGrid(benchmark::State& state) {
  const opo::Axis psi{"psi_sum", -std::numbers::pi / 2, std::numbers::pi / 2, 181};
  const opo::Axis omega{"omega", -2.0, 2.0, 201};
  for (auto _ : state)
    benchmark::DoNotOptimize(opo::epr_scan(ref, opo::DetectionScheme::horizontal, opo::OptimalGain{}, psi, omega, 1));
}
BENCHMARK(BM_EprScanDefaultGrid)->Unit(benchmark::kMillisecond);

void BM_StokesPoint(benchmark::State& state) {
  const opo::QuadratureSpec q = opo::QuadratureSpec::defaults_for(ref);
  for (auto _ : state) benchmark::DoNotOptimize(opo::stokes_point(ref, {0.2, 0.5}, q));
}
BENCHMARK(BM_StokesPoint)->Unit(benchmark::kMicrosecond);

void BM_WickFourthMoment(benchmark::State& state) {
  const opo::TransverseMode k{0.3, 0.4};
  const opo::ModeLabel a{opo::Field::signal, k, 0.2, false};
  const opo::ModeLabel b{opo::Field::idler, -k, -0.2, false};
  const std::array<opo::ModeLabel, 4> ops{a.adjoint(), a, b.adjoint(), b};
  for (auto _ : state) benchmark::DoNotOptimize(opo::wick_moment(ref, ops));
}
BENCHMARK(BM_WickFourthMoment);

} // namespace

BENCHMARK_MAIN();
