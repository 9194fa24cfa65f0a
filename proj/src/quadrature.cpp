#include "robinwall/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace robinwall {

namespace {
constexpr double kPi = std::numbers::pi;
}

void ToleranceConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("tolerances must be positive");
  }
  if (max_subdivisions < 32) {
    throw DomainError("max_subdivisions must be at least 32");
  }
  if (!(x_cut_threshold > 0.0) || x_cut_threshold > 1e-14) {
    throw DomainError("x_cut_threshold must lie in (0, 1e-14]");
  }
  if (!(k_tail_switch > 0.0) || !(k_tail_switch_dirichlet > 0.0)) {
    throw DomainError("tail switches must be positive");
  }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const ToleranceConfig& cfg) {
  if (std::isnan(a) || std::isnan(b)) {
    throw DomainError("integrate: NaN limit");
  }
  if (a == b) return {};
  if (a > b) {
    auto r = integrate(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }
  const auto wrap = [](double v) { return std::array<double, 1>{v}; };
  VectorQuadratureResult<1> r;
  if (std::isinf(a) && std::isinf(b)) {
    const auto lower = integrate(f, a, 0.0, cfg);
    const auto upper = integrate(f, 0.0, b, cfg);
    return {lower.value + upper.value, lower.error + upper.error,
            lower.evaluations + upper.evaluations};
  }
  const std::array<double, 2> unit = {0.0, 1.0};
  if (std::isinf(a)) {
    // x = b - (1 - t)/t, dx = dt/t^2
    r = integrate_vector<1>(
        [&](double t) {
          if (t <= 0.0) return wrap(0.0);
          return wrap(f(b - (1.0 - t) / t) / (t * t));
        },
        unit, cfg);
  } else if (std::isinf(b)) {
    r = integrate_vector<1>(
        [&](double t) {
          if (t <= 0.0) return wrap(0.0);
          return wrap(f(a + (1.0 - t) / t) / (t * t));
        },
        unit, cfg);
  } else {
    const std::array<double, 2> ends = {a, b};
    r = integrate_vector<1>([&](double x) { return wrap(f(x)); }, ends, cfg);
  }
  return {r.value[0], r.error[0], r.evaluations};
}

std::complex<double> fourier_half_line(
    const std::function<double(double)>& psi, double k, double x_cut,
    const ToleranceConfig& cfg,
    const std::function<double(double)>& local_period) {
  if (!(x_cut < 0.0)) throw DomainError("fourier_half_line: x_cut must be < 0");
  const double wave = k != 0.0 ? 2.0 * kPi / std::abs(k)
                               : std::numeric_limits<double>::infinity();
  std::vector<double> breaks{0.0};
  double x = 0.0;
  while (x > x_cut) {
    double width = wave;
    if (local_period) width = std::min(width, local_period(x));
    if (!std::isfinite(width)) width = -x_cut;
    width /= 8.0;
    x = std::max(x - width, x_cut);
    breaks.push_back(x);
  }
  std::reverse(breaks.begin(), breaks.end());
  const auto r = integrate_vector<2>(
      [&](double t) {
        const double v = psi(t);
        return std::array<double, 2>{v * std::cos(k * t), -v * std::sin(k * t)};
      },
      breaks, cfg);
  return std::complex<double>(r.value[0], r.value[1]) / std::sqrt(2.0 * kPi);
}

TailMoments momentum_tail_moments(const MomentumTail& tail, double K) {
  if (!(K > 0.0)) throw DomainError("momentum_tail_moments: K must be > 0");
  const double A = tail.leading();
  const double B = tail.next();
  const double lnK = std::log(K);
  const double K3 = K * K * K;
  const double K5 = K3 * K * K;

  TailMoments one_side;
  double power = K;
  for (std::size_t p = 0; p < tail.coefficients.size(); ++p) {
    one_side.probability +=
        tail.coefficients[p] / ((2.0 * static_cast<double>(p) + 1.0) * power);
    power *= K * K;
  }
  if (A > 0.0) {
    const double lnA = std::log(A);
    one_side.entropy = A * (2.0 * (lnK + 1.0) - lnA) / K +
                       B * (2.0 * (3.0 * lnK + 1.0) / 9.0 - (lnA + 1.0) / 3.0) /
                           K3;
    one_side.fisher = 4.0 * A / (3.0 * K3) + 12.0 * B / (5.0 * K5);
    one_side.onicescu =
        A * A / (3.0 * K3) + 2.0 * A * B / (5.0 * K5) + B * B / (7.0 * K5 * K * K);
  } else if (B > 0.0) {
    const double lnB = std::log(B);
    one_side.entropy = B * (4.0 * (3.0 * lnK + 1.0) / 9.0 - lnB / 3.0) / K3;
    one_side.fisher = 16.0 * B / (5.0 * K5);
    one_side.onicescu = B * B / (7.0 * K5 * K * K);
  }
  return {2.0 * one_side.probability, 2.0 * one_side.entropy,
          2.0 * one_side.fisher, 2.0 * one_side.onicescu};
}

double momentum_tail_moment(double psi0, int p, double K,
                            const ToleranceConfig& cfg) {
  if (p != 0) {
    throw DomainError(
        "momentum_tail_moment: only p = 0 is closed-form here; use "
        "momentum_tail_moments");
  }
  const double minimum =
      psi0 != 0.0 ? cfg.k_tail_switch : cfg.k_tail_switch_dirichlet;
  if (K < minimum) {
    throw DomainError("momentum_tail_moment: K = " + std::to_string(K) +
                      " is below the tail switch " + std::to_string(minimum));
  }
  return psi0 * psi0 / (kPi * K);
}

}  // namespace robinwall
