#include "robinwall/infomeasures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "robinwall/errors.hpp"
#include "robinwall/special_functions.hpp"

namespace robinwall {

namespace {

constexpr double kPi = std::numbers::pi;

double total_entropy(int n, double field, const ToleranceConfig& cfg) {
  const auto [sx, sk] =
      shannon(build_state(energy(Boundary::robin_minus, n, field), cfg), cfg);
  return sx + sk;
}

double fisher_product_at(int n, double field, const ToleranceConfig& cfg) {
  const auto [ix, ik] =
      fisher(build_state(energy(Boundary::robin_minus, n, field), cfg), cfg);
  return ix * ik;
}

}  // namespace

double entropic_bound() { return 1.0 + std::log(kPi); }

std::pair<double, double> shannon(const StateFunctions& sf,
                                  const ToleranceConfig& cfg) {
  return {sf.position_integrals(cfg).entropy,
          sf.momentum_integrals(cfg).entropy};
}

double fisher_position_analytic(const BoundState& st) {
  const double E = st.energy;
  if (st.field == 0.0) return 4.0;
  if (is_robin(st.bc)) {
    return (4.0 / 3.0) * (2.0 * robin_sign(st.bc) * st.field + E + E * E) /
           (E + 1.0);
  }
  return (4.0 / 3.0) * E;
}

std::pair<double, double> fisher(const StateFunctions& sf,
                                 const ToleranceConfig& cfg) {
  const double analytic = fisher_position_analytic(sf.state());
  const double numeric = sf.position_integrals(cfg).fisher;
  if (!(std::abs(analytic - numeric) <= 1e-6 * std::abs(analytic))) {
    throw ConsistencyError("position Fisher information: closed form " +
                           std::to_string(analytic) + " vs quadrature " +
                           std::to_string(numeric));
  }
  return {analytic, sf.momentum_integrals(cfg).fisher};
}

std::pair<double, double> onicescu(const StateFunctions& sf,
                                   const ToleranceConfig& cfg) {
  return {sf.position_integrals(cfg).onicescu,
          sf.momentum_integrals(cfg).onicescu};
}

Complexity cgl(const InfoRecord& info) {
  Complexity c;
  c.x = std::exp(info.S_x) * info.O_x;
  c.k = std::exp(info.S_k) * info.O_k;
  c.product = c.x * c.k;
  return c;
}

InfoRecord info_record(const StateFunctions& sf, const ToleranceConfig& cfg) {
  InfoRecord r;
  std::tie(r.S_x, r.S_k) = shannon(sf, cfg);
  std::tie(r.I_x, r.I_k) = fisher(sf, cfg);
  std::tie(r.O_x, r.O_k) = onicescu(sf, cfg);
  r.S_t = r.S_x + r.S_k;
  r.fisher_product = r.I_x * r.I_k;
  r.onicescu_product = r.O_x * r.O_k;
  const Complexity c = cgl(r);
  r.CGL_x = c.x;
  r.CGL_k = c.k;
  r.CGL_product = c.product;
  return r;
}

InfoRecord info_record(const StateFunctions& sf) {
  return info_record(sf, sf.config());
}

FlatWell flat_well_approximation(double field) {
  if (!(field > 0.0)) {
    throw DomainError("flat_well_approximation: field must be positive");
  }
  const double ln_a1 = std::log(std::abs(airy_root(AiryZeroKind::ai, 1)));
  const double ln_f = std::log(field) / 3.0;
  FlatWell w;
  w.S_x = 2.0 * std::log(2.0) - 1.0 + ln_a1 - ln_f;
  w.S_k = kUnitWellMomentumEntropy - std::log(2.0) - ln_a1 + ln_f;
  w.S_t = w.S_x + w.S_k;
  return w;
}

double entropy_crossing(const ToleranceConfig& cfg) {
  const auto diff = [&](double f) {
    return total_entropy(0, f, cfg) - total_entropy(1, f, cfg);
  };
  double lo = 0.1;
  double hi = 5.0;
  double d_lo = diff(lo);
  const double d_hi = diff(hi);
  if ((d_lo < 0.0) == (d_hi < 0.0)) {
    throw BracketError("entropy_crossing: S_t0 - S_t1 has one sign on [0.1, 5]",
                       {{lo, d_lo}, {hi, d_hi}});
  }
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    const double d = diff(mid);
    if ((d < 0.0) == (d_lo < 0.0)) {
      lo = mid;
      d_lo = d;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

FisherMaximum fisher_product_maximum(int n, const ToleranceConfig& cfg) {
  if (n < 1) throw DomainError("fisher_product_maximum: n must be >= 1");
  const auto g = [&](double u) { return fisher_product_at(n, std::exp(u), cfg); };

  // Coarse log scan to isolate the peak, then golden section.
  const double u_min = std::log(1e-4);
  const double u_max = std::log(1.0);
  constexpr int kScan = 24;
  std::vector<double> us;
  std::vector<double> gs;
  for (int i = 0; i <= kScan; ++i) {
    us.push_back(u_min + (u_max - u_min) * i / kScan);
    gs.push_back(g(us.back()));
  }
  const auto best = static_cast<std::size_t>(
      std::max_element(gs.begin(), gs.end()) - gs.begin());
  double a = us[best == 0 ? 0 : best - 1];
  double b = us[std::min<std::size_t>(best + 1, kScan)];

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c);
  double gd = g(d);
  for (int iter = 0; iter < 200; ++iter) {
    const double fa = std::exp(a);
    const double fb = std::exp(b);
    if (fb - fa <= std::min(1e-3, 1e-2 * fa)) break;
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  FisherMaximum out;
  out.bracket = {std::exp(a), std::exp(b)};
  const double u = 0.5 * (a + b);
  out.field = std::exp(u);
  out.value = g(u);
  return out;
}

double polynomial_limit(const std::vector<double>& t,
                        const std::vector<double>& y) {
  if (t.size() != y.size() || t.empty()) {
    throw DomainError("polynomial_limit: mismatched samples");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j != i) w *= t[j] / (t[j] - t[i]);
    }
    sum += w * y[i];
  }
  return sum;
}

FisherLimits fisher_product_limits(int n, const ToleranceConfig& cfg) {
  if (n < 1) throw DomainError("fisher_product_limits: n must be >= 1");
  const std::vector<double> t = {0.005, 0.01, 0.02};
  std::vector<double> weak;
  std::vector<double> strong;
  for (double v : t) {
    weak.push_back(fisher_product_at(n, v * v * v, cfg));
    strong.push_back(fisher_product_at(n, 1.0 / (v * v * v), cfg));
  }
  return {polynomial_limit(t, weak), polynomial_limit(t, strong)};
}

double momentum_fisher_coefficient(Boundary bc, int n,
                                   const ToleranceConfig& cfg) {
  if (is_robin(bc)) {
    throw DomainError(
        "momentum_fisher_coefficient: Robin I_k does not scale as field^{-2/3}");
  }
  return build_state(energy(bc, n, 1.0), cfg).momentum_integrals(cfg).fisher;
}

}  // namespace robinwall
