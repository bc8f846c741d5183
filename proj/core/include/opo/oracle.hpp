#pragma once

#include "opo/correlators.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace opo {

// One output (or input) operator A_j(k, omega), optionally daggered.
struct ModeLabel {
  Field field = Field::signal;
  TransverseMode k;
  double omega = 0.0;
  bool dagger = false;

  ModeLabel adjoint() const noexcept { return {field, k, omega, !dagger}; }
  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

struct ExpansionTerm {
  ModeLabel input;
  cplx coeff;
};

// Output operator in terms of vacuum input operators:
//   A_j(k,w) = U_j a_j(k,w) + V_j a_o^dag(-k,-w),  o = partner(j).
using LinearExpansion = std::array<ExpansionTerm, 2>;

LinearExpansion expand_output(const OpoParams& p, const ModeLabel& out);

inline constexpr std::size_t wick_max_operators = 8;

// Vacuum expectation of an ordered product of output operators. Inputs are
// contracted pairwise with <a a^dag> = 1 for identical labels (annihilator
// on the left) and 0 otherwise; continuum delta functions are therefore
// reduced to exact label matching. Throws OracleError for odd lengths or
// more than wick_max_operators factors.
cplx wick_moment(const OpoParams& p, std::span<const ModeLabel> ops);

struct McSecondMoments {
  SecondMoments estimate;
  double n1_se = 0.0;
  double n2_se = 0.0;
  double c12_re_se = 0.0;
  double c12_im_se = 0.0;
};

// Gaussian sampling of the four vacuum input modes feeding A1(k,w), A2(k,w)
// and A2(-k,-w), each a circular complex normal with <|a|^2> = 1/2. Uses
// mt19937_64 and Box-Muller on 53-bit uniforms, so a fixed seed reproduces
// the same stream on every platform. Throws OracleError if n_samples < 1000.
McSecondMoments mc_second_moments(const OpoParams& p, TransverseMode k, double omega,
                                  std::int64_t n_samples, std::uint64_t seed);

} // namespace opo
