#include "opo/oracle.hpp"

#include "opo/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace opo {

LinearExpansion expand_output(const OpoParams& p, const ModeLabel& out) {
  const TransferCoeffs t = transfer_coeffs(p, out.k, out.omega);
  const bool sig = out.field == Field::signal;
  cplx u = sig ? t.u1 : t.u2;
  cplx v = sig ? t.v1 : t.v2;
  ModeLabel direct{out.field, out.k, out.omega, out.dagger};
  ModeLabel conjugate{partner(out.field), -out.k, -out.omega, !out.dagger};
  if (out.dagger) {
    u = std::conj(u);
    v = std::conj(v);
  }
  return {ExpansionTerm{direct, u}, ExpansionTerm{conjugate, v}};
}

namespace {

bool same_mode(const ModeLabel& a, const ModeLabel& b) {
  return a.field == b.field && a.k.kx == b.k.kx && a.k.ky == b.k.ky && a.omega == b.omega;
}

// Sum over perfect pairings of the remaining indices; `used` is a bitmask.
cplx pairings(const std::vector<std::vector<cplx>>& c, unsigned used, std::size_t n) {
  std::size_t first = 0;
  while (first < n && (used & (1u << first))) ++first;
  if (first == n) return {1.0, 0.0};
  cplx sum{};
  for (std::size_t j = first + 1; j < n; ++j) {
    if (used & (1u << j)) continue;
    if (c[first][j] == cplx{}) continue;
    sum += c[first][j] * pairings(c, used | (1u << first) | (1u << j), n);
  }
  return sum;
}

} // namespace

cplx wick_moment(const OpoParams& p, std::span<const ModeLabel> ops) {
  const std::size_t n = ops.size();
  if (n % 2 != 0) throw OracleError("odd-order vacuum moments vanish; wick_moment needs an even count");
  if (n > wick_max_operators) throw OracleError("wick_moment supports at most 8 operators");
  if (n == 0) return {1.0, 0.0};

  std::vector<LinearExpansion> ex;
  ex.reserve(n);
  for (const auto& op : ops) ex.push_back(expand_output(p, op));

  // Output-level contraction <O_i O_j> for i < j, expanded over the input
  // terms: only annihilator-left, creator-right pairs of one mode survive.
  std::vector<std::vector<cplx>> c(n, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& a : ex[i])
        for (const auto& b : ex[j])
          if (!a.input.dagger && b.input.dagger && same_mode(a.input, b.input))
            c[i][j] += a.coeff * b.coeff;
  return pairings(c, 0u, n);
}

namespace {

class GaussianSource {
public:
  explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}

  // Circular complex normal with E|z|^2 = 1/2.
  cplx next() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    return 0.5 * cplx(r * std::cos(th), r * std::sin(th));
  }

private:
  // (0, 1] with 53 random bits.
  double uniform() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

  std::mt19937_64 eng_;
};

struct Accumulator {
  double sum = 0.0;
  double sum2 = 0.0;
  void add(double x) {
    sum += x;
    sum2 += x * x;
  }
  double mean(double n) const { return sum / n; }
  double se(double n) const {
    const double m = sum / n;
    const double var = std::max(0.0, (sum2 / n - m * m) * n / (n - 1.0));
    return std::sqrt(var / n);
  }
};

} // namespace

McSecondMoments mc_second_moments(const OpoParams& p, TransverseMode k, double omega,
                                  std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1000) throw OracleError("mc_second_moments needs at least 1000 samples");
  const TransferCoeffs t = transfer_coeffs(p, k, omega);
  const TransferCoeffs m = transfer_coeffs(p, -k, -omega);

  GaussianSource src(seed);
  Accumulator n1, n2, cre, cim;
  for (std::int64_t s = 0; s < n_samples; ++s) {
    const cplx a1_k = src.next();  // a1( k,  w)
    const cplx a2_mk = src.next(); // a2(-k, -w)
    const cplx a2_k = src.next();  // a2( k,  w)
    const cplx a1_mk = src.next(); // a1(-k, -w)

    const cplx out1 = t.u1 * a1_k + t.v1 * std::conj(a2_mk);
    const cplx out2 = t.u2 * a2_k + t.v2 * std::conj(a1_mk);
    const cplx out2_m = m.u2 * a2_mk + m.v2 * std::conj(a1_k);
    const cplx c = out1 * out2_m;
    n1.add(std::norm(out1));
    n2.add(std::norm(out2));
    cre.add(c.real());
    cim.add(c.imag());
  }
  const double n = static_cast<double>(n_samples);
  McSecondMoments r;
  r.estimate.n1 = n1.mean(n) - 0.5;
  r.estimate.n2 = n2.mean(n) - 0.5;
  r.estimate.c12 = {cre.mean(n), cim.mean(n)};
  r.n1_se = n1.se(n);
  r.n2_se = n2.se(n);
  r.c12_re_se = cre.se(n);
  r.c12_im_se = cim.se(n);
  return r;
}

} // namespace opo
