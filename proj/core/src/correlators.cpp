#include "opo/correlators.hpp"

#include <cmath>
#include <numbers>

namespace opo {

SecondMoments second_moments(const OpoParams& p, TransverseMode k, double omega) {
  const TransferCoeffs t = transfer_coeffs(p, k, omega);
  const TransferCoeffs m = transfer_coeffs(p, -k, -omega);
  return {std::norm(t.v1), std::norm(t.v2), t.u1 * m.v2};
}

std::vector<double> spectral_breakpoints(const OpoParams& p, TransverseMode k) {
  std::vector<double> out{0.0};
  for (TransverseMode q : {k, -k})
    for (Field f : {Field::signal, Field::idler}) {
      const double w = hopf_frequency(p, f, q);
      out.push_back(w);
      out.push_back(-w);
    }
  return out;
}

double farfield_intensity(const OpoParams& p, TransverseMode k, const QuadratureSpec& q) {
  if (p.a0 == 0.0) return 0.0;
  const auto bp = spectral_breakpoints(p, k);
  auto f = [&](double w) {
    const TransferCoeffs t = transfer_coeffs(p, k, w);
    return std::array<double, 1>{std::norm(t.v1) + std::norm(t.v2)};
  };
  const auto r = integrate<1>(f, bp, q);
  return p.sigma / (2.0 * std::numbers::pi) * r.value[0];
}

double local_quadrature_spectrum(const OpoParams& p, TransverseMode k, double omega, double theta) {
  const TransferCoeffs t = transfer_coeffs(p, k, omega);
  const TransferCoeffs m = transfer_coeffs(p, k, -omega);
  const double c = std::cos(theta), s = std::sin(theta);
  return p.sigma * (1.0 + c * c * (std::norm(t.v1) + std::norm(m.v1)) +
                    s * s * (std::norm(t.v2) + std::norm(m.v2)));
}

} // namespace opo
