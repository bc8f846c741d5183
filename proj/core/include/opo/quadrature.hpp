#pragma once

#include "opo/errors.hpp"
#include "opo/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace opo {

struct QuadratureSpec {
  double omega_max = 50.0;
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_intervals = 4000;

  // omega_max = 50 max(gamma1, gamma2), default tolerances.
  static QuadratureSpec defaults_for(const OpoParams& p);
  void validate() const;
};

// Asymptotic weight of one |V_j|^2 spectrum beyond |omega| > omega_max,
// using |V_j|^2 ~ 4 a0^2 g1^2 g2^2 / omega^4. The engine integrates the tails
// exactly through a change of variables; this figure is for reporting.
double tail_estimate(const OpoParams& p, double omega_max) noexcept;

template <std::size_t N>
struct QuadResult {
  std::array<double, N> value{};
  std::array<double, N> error{};
  int intervals = 0;
};

enum class Domain { real_line, positive_half };

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// kind 0: plain interval [lo, hi] in omega.
// kind +1 / -1: t in [lo, hi] subset of (0, 1], omega = kind * W / t.
struct Piece {
  double lo, hi;
  int kind;
};

template <std::size_t N>
struct PieceEstimate {
  Piece piece;
  std::array<double, N> value;
  std::array<double, N> error;
};

template <std::size_t N, class F>
std::array<double, N> eval_mapped(F& f, const Piece& pc, double w, double x) {
  if (pc.kind == 0) return f(x);
  const double t = x;
  std::array<double, N> r = f(pc.kind * w / t);
  const double jac = w / (t * t);
  for (auto& v : r) v *= jac;
  return r;
}

template <std::size_t N, class F>
PieceEstimate<N> gk15(F& f, const Piece& pc, double w) {
  const double center = 0.5 * (pc.lo + pc.hi);
  const double half = 0.5 * (pc.hi - pc.lo);
  std::array<double, N> fc = eval_mapped<N>(f, pc, w, center);
  std::array<double, N> resg{}, resk{}, reskh{}, resasc{}, resabs{};
  std::array<std::array<double, N>, 7> f1{}, f2{};

  for (std::size_t i = 0; i < N; ++i) {
    resg[i] = fc[i] * wg[3];
    resk[i] = fc[i] * wgk[7];
    resabs[i] = std::abs(resk[i]);
  }
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    f1[j] = eval_mapped<N>(f, pc, w, center - dx);
    f2[j] = eval_mapped<N>(f, pc, w, center + dx);
    for (std::size_t i = 0; i < N; ++i) {
      const double s = f1[j][i] + f2[j][i];
      resk[i] += wgk[j] * s;
      resabs[i] += wgk[j] * (std::abs(f1[j][i]) + std::abs(f2[j][i]));
      if (j % 2 == 1) resg[i] += wg[j / 2] * s;
    }
  }

  PieceEstimate<N> out{pc, {}, {}};
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < N; ++i) {
    reskh[i] = 0.5 * resk[i];
    resasc[i] = wgk[7] * std::abs(fc[i] - reskh[i]);
    for (int j = 0; j < 7; ++j)
      resasc[i] += wgk[j] * (std::abs(f1[j][i] - reskh[i]) + std::abs(f2[j][i] - reskh[i]));
    const double ah = std::abs(half);
    double err = std::abs((resk[i] - resg[i]) * half);
    const double asc = resasc[i] * ah;
    const double abs_int = resabs[i] * ah;
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    if (abs_int > tiny / (50.0 * eps)) err = std::max(50.0 * eps * abs_int, err);
    out.value[i] = resk[i] * half;
    out.error[i] = err;
  }
  return out;
}

inline std::vector<double> core_points(std::span<const double> breakpoints, double w, Domain domain) {
  static constexpr double grading[] = {0.0, 0.05, 0.2, 1.0};
  const double lo = domain == Domain::real_line ? -w : 0.0;
  std::vector<double> pts{lo, w};
  for (double b : breakpoints) {
    if (!std::isfinite(b)) continue;
    if (domain == Domain::positive_half) b = std::abs(b);
    for (double g : grading)
      for (double s : {-1.0, 1.0}) {
        const double x = b + s * g;
        if (x > lo && x < w) pts.push_back(x);
      }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)); }),
            pts.end());
  return pts;
}

} // namespace detail

/// Adaptive vector-valued Gauss-Kronrod integration over the real line or
/// over [0, inf). The finite core [-W, W] (or [0, W]) is split at the given
/// breakpoints; the tails are mapped onto (0, 1] by omega = W / t.
///
/// Component i converges when its error estimate is below
/// max(abs_tol, rel_tol * |I[ref[i]]|); with an empty `ref` each component
/// is measured against itself. Components whose integral cancels to zero
/// should point at a non-cancelling companion.
template <std::size_t N, class F>
QuadResult<N> integrate(F&& f, std::span<const double> breakpoints, const QuadratureSpec& q,
                        Domain domain = Domain::real_line,
                        std::span<const std::size_t> ref = {}) {
  using detail::Piece;
  const double w = q.omega_max;
  std::vector<detail::PieceEstimate<N>> pieces;

  const auto pts = detail::core_points(breakpoints, w, domain);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    pieces.push_back(detail::gk15<N>(f, Piece{pts[i], pts[i + 1], 0}, w));
  pieces.push_back(detail::gk15<N>(f, Piece{0.0, 1.0, +1}, w));
  if (domain == Domain::real_line) pieces.push_back(detail::gk15<N>(f, Piece{0.0, 1.0, -1}, w));

  QuadResult<N> res;
  for (;;) {
    res.value.fill(0.0);
    res.error.fill(0.0);
    for (const auto& pc : pieces)
      for (std::size_t i = 0; i < N; ++i) {
        res.value[i] += pc.value[i];
        res.error[i] += pc.error[i];
      }
    res.intervals = static_cast<int>(pieces.size());

    std::array<double, N> tol{};
    bool done = true;
    for (std::size_t i = 0; i < N; ++i) {
      const std::size_t r = ref.empty() ? i : ref[i];
      tol[i] = std::max(q.abs_tol, q.rel_tol * std::abs(res.value[r]));
      if (res.error[i] > tol[i]) done = false;
    }
    if (done) return res;
    if (res.intervals >= q.max_intervals)
      throw QuadratureNonConvergence("adaptive quadrature exhausted its interval budget");

    std::size_t worst = pieces.size();
    double worst_score = 0.0;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      const auto& pc = pieces[j];
      const double width = pc.piece.hi - pc.piece.lo;
      if (width <= 1e-13 * (1.0 + std::abs(pc.piece.lo))) continue;
      double score = 0.0;
      for (std::size_t i = 0; i < N; ++i) score = std::max(score, pc.error[i] / tol[i]);
      if (score > worst_score) {
        worst_score = score;
        worst = j;
      }
    }
    if (worst == pieces.size())
      throw QuadratureNonConvergence("adaptive quadrature cannot refine any further");

    const Piece old = pieces[worst].piece;
    const double mid = 0.5 * (old.lo + old.hi);
    pieces[worst] = detail::gk15<N>(f, Piece{old.lo, mid, old.kind}, w);
    pieces.push_back(detail::gk15<N>(f, Piece{mid, old.hi, old.kind}, w));
  }
}

} // namespace opo
