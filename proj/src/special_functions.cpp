#include "robinwall/special_functions.hpp"

#include <boost/math/special_functions/airy.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "robinwall/errors.hpp"

namespace robinwall {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument is not finite");
  }
}

}  // namespace

double airy_exponent(double x) {
  return x > 0.0 ? (2.0 / 3.0) * x * std::sqrt(x) : 0.0;
}

AiryValue airy(double x) {
  require_finite(x, "airy");
  if (x > kAiryMaxArgument) {
    return {0.0, -0.0, true};
  }
  return {boost::math::airy_ai(x), boost::math::airy_ai_prime(x), false};
}

namespace detail {

// Ai(x) e^{zeta} ~ x^{-1/4}/(2 sqrt(pi)) sum (-1)^k u_k zeta^{-k}
// Ai'(x) e^{zeta} ~ -x^{1/4}/(2 sqrt(pi)) sum (-1)^k v_k zeta^{-k}
ScaledAiry airy_scaled_asymptotic(double x) {
  const double zeta = airy_exponent(x);
  const double inv_zeta = 1.0 / zeta;
  double u = 1.0;
  double sum_u = 1.0;
  double sum_v = 1.0;
  double power = 1.0;
  double last = 1.0;
  for (int k = 1; k < 40; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
         ((2.0 * k - 1.0) * 216.0 * k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    power *= -inv_zeta;
    const double term_u = u * power;
    const double term_v = v * power;
    if (std::abs(term_u) > last) break;  // asymptotic series turned around
    sum_u += term_u;
    sum_v += term_v;
    last = std::abs(term_u);
    if (last < 1e-18 && std::abs(term_v) < 1e-18) break;
  }
  const double root4 = std::sqrt(std::sqrt(x));
  const double pref = 0.5 / std::sqrt(kPi);
  return {pref / root4 * sum_u, -pref * root4 * sum_v, zeta};
}

}  // namespace detail

ScaledAiry airy_scaled(double x) {
  require_finite(x, "airy_scaled");
  if (x >= kAiryAsymptoticSwitch) {
    return detail::airy_scaled_asymptotic(x);
  }
  const double zeta = airy_exponent(x);
  const double scale = std::exp(zeta);
  return {boost::math::airy_ai(x) * scale,
          boost::math::airy_ai_prime(x) * scale, zeta};
}

double log_airy(double x) {
  const ScaledAiry s = airy_scaled(x);
  if (!(s.ai > 0.0)) {
    throw DomainError("log_airy: Ai is not positive at this argument");
  }
  return std::log(s.ai) - s.exponent;
}

double airy_root_asymptotic(AiryZeroKind kind, int n) {
  if (n < 1) throw DomainError("airy_root_asymptotic: n must be >= 1");
  const bool ai = kind == AiryZeroKind::ai;
  const double t = 3.0 * kPi * (4.0 * n - (ai ? 1.0 : 3.0)) / 8.0;
  const double t2 = 1.0 / (t * t);
  // Coefficients of the standard expansions in t^{-2}.
  static constexpr std::array<double, 5> kAiCoef = {
      1.0, 5.0 / 48.0, -5.0 / 36.0, 77125.0 / 82944.0,
      -108056875.0 / 6967296.0};
  static constexpr std::array<double, 5> kAiPrimeCoef = {
      1.0, -7.0 / 48.0, 35.0 / 288.0, -181223.0 / 207360.0,
      18683371.0 / 1244160.0};
  const auto& coef = ai ? kAiCoef : kAiPrimeCoef;
  // The tail of the series diverges for the first couple of zeros.
  const std::size_t terms = t > 5.0 ? coef.size() : 3;
  double sum = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < terms; ++i) {
    sum += coef[i] * p;
    p *= t2;
  }
  return -std::cbrt(t * t) * sum;
}

namespace {

double refine_root(AiryZeroKind kind, int n) {
  double x = airy_root_asymptotic(kind, n);
  for (int iter = 0; iter < 60; ++iter) {
    const double ai = boost::math::airy_ai(x);
    const double aip = boost::math::airy_ai_prime(x);
    // Ai'' = x Ai.
    const double step = kind == AiryZeroKind::ai ? ai / aip : aip / (x * ai);
    x -= step;
    if (std::abs(step) <= 4e-16 * std::abs(x)) break;
  }
  return x;
}

}  // namespace

AiryRootTable::AiryRootTable() {
  a_.reserve(kCapacity);
  a_prime_.reserve(kCapacity);
  for (int n = 1; n <= kCapacity; ++n) {
    a_.push_back(refine_root(AiryZeroKind::ai, n));
    a_prime_.push_back(refine_root(AiryZeroKind::ai_prime, n));
  }
}

const AiryRootTable& AiryRootTable::instance() {
  static const AiryRootTable table;
  return table;
}

double airy_root(AiryZeroKind kind, int n) {
  if (n < 1) throw DomainError("airy_root: n must be >= 1");
  if (n <= AiryRootTable::kCapacity) {
    const auto& table = AiryRootTable::instance();
    return kind == AiryZeroKind::ai ? table.a(n) : table.a_prime(n);
  }
  return refine_root(kind, n);
}

double gamma_fn(double x) {
  require_finite(x, "gamma_fn");
  if (x <= 0.0) throw DomainError("gamma_fn: argument must be positive");
  return std::tgamma(x);
}

}  // namespace robinwall
