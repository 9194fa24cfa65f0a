#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "robinwall/errors.hpp"

namespace robinwall {

/// Numerical knobs shared by quadrature, state construction and the
/// information measures.
struct ToleranceConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  /// |psi| below this fraction of its peak is treated as zero (x -> -inf).
  double x_cut_threshold = 1e-16;
  /// Minimum |k| where the analytic momentum tail takes over.
  double k_tail_switch = 200.0;
  /// Same, for Dirichlet states whose density falls off as k^-4.
  double k_tail_switch_dirichlet = 50.0;

  /// Throws DomainError on out-of-range values.
  void validate() const;

  bool operator==(const ToleranceConfig&) const = default;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

template <std::size_t N>
struct VectorQuadratureResult {
  std::array<double, N> value{};
  std::array<double, N> error{};
  int evaluations = 0;
  int subdivisions = 0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208734014434, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod nodes.
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <std::size_t N>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  std::array<double, N> value{};
  std::array<double, N> error{};
  bool splittable = true;
};

template <std::size_t N, class F>
Panel<N> kronrod21(const F& f, double a, double b) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<std::array<double, N>, 21> samples;
  samples[10] = f(center);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    samples[j] = f(center - dx);
    samples[20 - j] = f(center + dx);
  }

  Panel<N> panel{a, b, {}, {}, true};
  for (std::size_t c = 0; c < N; ++c) {
    double kronrod = kKronrodWeights[10] * samples[10][c];
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);
    for (std::size_t j = 0; j < 10; ++j) {
      const double pair = samples[j][c] + samples[20 - j][c];
      kronrod += kKronrodWeights[j] * pair;
      abs_sum += kKronrodWeights[j] *
                 (std::abs(samples[j][c]) + std::abs(samples[20 - j][c]));
      if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    const double mean = 0.5 * kronrod;
    double asc = kKronrodWeights[10] * std::abs(samples[10][c] - mean);
    for (std::size_t j = 0; j < 10; ++j) {
      asc += kKronrodWeights[j] * (std::abs(samples[j][c] - mean) +
                                   std::abs(samples[20 - j][c] - mean));
    }
    const double result = kronrod * half;
    const double res_abs = abs_sum * std::abs(half);
    const double res_asc = asc * std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    if (res_asc != 0.0 && err != 0.0) {
      err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    }
    if (res_abs > kTiny / (50.0 * kEps)) {
      err = std::max(50.0 * kEps * res_abs, err);
    }
    panel.value[c] = result;
    panel.error[c] = err;
  }
  const double width = b - a;
  const double scale = std::max({std::abs(a), std::abs(b), kTiny});
  panel.splittable = width > 1e-13 * scale;
  return panel;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of an N-component integrand over the
/// intervals delimited by `breakpoints` (sorted, at least two entries).
/// Every component must meet max(abs_tol, rel_tol*|value|). Panels with the
/// largest tolerance-normalised error are bisected first.
template <std::size_t N, class F>
VectorQuadratureResult<N> integrate_vector(const F& f,
                                           std::span<const double> breakpoints,
                                           const ToleranceConfig& cfg) {
  if (breakpoints.size() < 2) {
    throw DomainError("integrate_vector: need at least two breakpoints");
  }
  std::vector<detail::Panel<N>> panels;
  panels.reserve(static_cast<std::size_t>(cfg.max_subdivisions) + 1);
  int evaluations = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      if (breakpoints[i] == breakpoints[i + 1]) continue;
      throw DomainError("integrate_vector: breakpoints must be increasing");
    }
    panels.push_back(detail::kronrod21<N>(f, breakpoints[i], breakpoints[i + 1]));
    evaluations += 21;
  }

  VectorQuadratureResult<N> out;
  for (;;) {
    std::array<double, N> total{};
    std::array<double, N> total_err{};
    for (const auto& p : panels) {
      for (std::size_t c = 0; c < N; ++c) {
        total[c] += p.value[c];
        total_err[c] += p.error[c];
      }
    }
    std::array<double, N> tol{};
    bool converged = true;
    for (std::size_t c = 0; c < N; ++c) {
      tol[c] = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total[c]));
      if (!(total_err[c] <= tol[c])) converged = false;
    }
    out.value = total;
    out.error = total_err;
    out.evaluations = evaluations;
    out.subdivisions = static_cast<int>(panels.size());
    if (converged) return out;

    std::size_t worst = panels.size();
    double worst_score = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (!panels[i].splittable) continue;
      double score = 0.0;
      for (std::size_t c = 0; c < N; ++c) {
        score = std::max(score, panels[i].error[c] / tol[c]);
      }
      if (score > worst_score) {
        worst_score = score;
        worst = i;
      }
    }
    const bool exhausted =
        static_cast<int>(panels.size()) >= cfg.max_subdivisions;
    if (worst == panels.size() || exhausted) {
      std::size_t bad = 0;
      for (std::size_t c = 0; c < N; ++c) {
        if (total_err[c] / tol[c] > total_err[bad] / tol[bad]) bad = c;
      }
      throw ConvergenceError(
          std::string("adaptive quadrature did not converge (") +
              (exhausted ? "subdivision limit" : "roundoff floor") +
              ", component " + std::to_string(bad) + ")",
          total[bad], total_err[bad]);
    }
    const auto parent = panels[worst];
    const double mid = 0.5 * (parent.a + parent.b);
    panels[worst] = detail::kronrod21<N>(f, parent.a, mid);
    panels.push_back(detail::kronrod21<N>(f, mid, parent.b));
    evaluations += 42;
  }
}

/// Scalar adaptive integral over [a, b]. Either end may be infinite; the
/// infinite half is mapped onto (0, 1] by x = b - (1 - t)/t.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const ToleranceConfig& cfg);

/// Phi(k) = (2 pi)^{-1/2} int_{x_cut}^0 e^{-ikx} psi(x) dx. Panels are no
/// wider than min(local_period(x), 2 pi/|k|)/8; `local_period` may be empty.
std::complex<double> fourier_half_line(
    const std::function<double(double)>& psi, double k, double x_cut,
    const ToleranceConfig& cfg,
    const std::function<double(double)>& local_period = {});

/// Large-|k| expansion of a momentum density, gamma(k) ~ sum_p c_p k^{-(2p+2)}.
/// c_0 = psi(0)^2/(2 pi); c_1 = (psi'(0)^2 + 2 E psi(0)^2)/(2 pi).
struct MomentumTail {
  std::vector<double> coefficients;

  double leading() const { return coefficients.empty() ? 0.0 : coefficients[0]; }
  double next() const {
    return coefficients.size() < 2 ? 0.0 : coefficients[1];
  }
};

/// Two-sided contributions of |k| > K to the four momentum functionals.
struct TailMoments {
  double probability = 0.0;  // int gamma
  double entropy = 0.0;      // -int gamma ln gamma
  double fisher = 0.0;       // int gamma'^2/gamma
  double onicescu = 0.0;     // int gamma^2
};

TailMoments momentum_tail_moments(const MomentumTail& tail, double K);

/// Closed-form int_{|k|>K} psi0^2/(2 pi k^2) dk = psi0^2/(pi K). Only p = 0
/// (probability) is defined here; the other functionals go through
/// `momentum_tail_moments`. Refuses K below the configured tail switch.
double momentum_tail_moment(double psi0, int p, double K,
                            const ToleranceConfig& cfg = {});

}  // namespace robinwall
