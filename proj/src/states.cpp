#include "robinwall/states.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "robinwall/errors.hpp"
#include "robinwall/special_functions.hpp"

namespace robinwall {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSeriesTerms = 48;
constexpr int kTailOrders = 20;

double a_zero(int n) { return airy_root(AiryZeroKind::ai, n); }
double a_prime_zero(int n) { return airy_root(AiryZeroKind::ai_prime, n); }

}  // namespace

struct StateFunctions::Impl {
  BoundState state;
  ToleranceConfig cfg;
  bool field_free = false;
  double s = 0.0;
  double z0 = 0.0;
  double zeta0 = 0.0;
  double c_scaled = 0.0;
  double x_cut = 0.0;
  std::vector<double> nodes;
  // psi^{(j)}(0)
  std::vector<double> d;

  std::once_flag grid_once;
  std::vector<double> grid_x;
  std::vector<double> grid_wpsi;
  double k_series = 0.0;
  MomentumTail tail;
  double tail_switch = 0.0;

  std::once_flag position_once;
  PositionIntegrals position;
  std::once_flag momentum_once;
  MomentumIntegrals momentum;

  std::pair<double, double> eval(double x) const {
    if (x > 0.0) return {0.0, 0.0};
    if (field_free) {
      const double v = std::sqrt(2.0) * std::exp(x);
      return {v, v};
    }
    const ScaledAiry a = airy_scaled(z0 - s * x);
    const double f = c_scaled * std::exp(zeta0 - a.exponent);
    return {f * a.ai, -s * f * a.ai_prime};
  }

  double local_length(double x) const {
    if (field_free) return 2.0 * kPi;
    const double z = z0 - s * x;
    return 2.0 * kPi / (s * std::sqrt(std::max(std::abs(z), 1.0)));
  }

  void ensure_grid();
  void build_grid(double k_max);
  std::pair<std::complex<double>, std::complex<double>> grid_phi(double k) const;
  std::pair<std::complex<double>, std::complex<double>> series_phi(double k) const;
  std::pair<std::complex<double>, std::complex<double>> phi_pair(double k);
  bool series_converged(double k) const;

  PositionIntegrals compute_position(const ToleranceConfig& c) const;
  MomentumIntegrals compute_momentum(const ToleranceConfig& c);
};

void StateFunctions::Impl::build_grid(double k_max) {
  using Rule = boost::math::quadrature::gauss<double, 8>;
  const auto& abscissa = Rule::abscissa();
  const auto& weights = Rule::weights();
  grid_x.clear();
  grid_wpsi.clear();
  double right = 0.0;
  while (right > x_cut) {
    const double width = std::min(local_length(right), 2.0 * kPi / k_max) / 8.0;
    const double left = std::max(right - width, x_cut);
    const double c = 0.5 * (left + right);
    const double h = 0.5 * (right - left);
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      const double offsets[2] = {abscissa[i], -abscissa[i]};
      for (int side = 0; side < (abscissa[i] == 0.0 ? 1 : 2); ++side) {
        const double x = c + h * offsets[side];
        grid_x.push_back(x);
        grid_wpsi.push_back(h * weights[i] * eval(x).first);
      }
    }
    right = left;
  }
}

std::pair<std::complex<double>, std::complex<double>>
StateFunctions::Impl::grid_phi(double k) const {
  double re = 0.0;
  double im = 0.0;
  double dre = 0.0;
  double dim = 0.0;
  for (std::size_t i = 0; i < grid_x.size(); ++i) {
    const double x = grid_x[i];
    const double w = grid_wpsi[i];
    const double c = std::cos(k * x);
    const double sn = std::sin(k * x);
    re += w * c;
    im -= w * sn;
    dre -= w * x * sn;
    dim -= w * x * c;
  }
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  return {{re * norm, im * norm}, {dre * norm, dim * norm}};
}

// int_{-inf}^0 e^{-ikx} f = sum_j (i/k)(-i/k)^j f^{(j)}(0); for f = x psi,
// f^{(j)}(0) = j d_{j-1}.
std::pair<std::complex<double>, std::complex<double>>
StateFunctions::Impl::series_phi(double k) const {
  const std::complex<double> u(0.0, -1.0 / k);
  std::complex<double> p(1.0, 0.0);
  std::complex<double> f(0.0, 0.0);
  std::complex<double> g(0.0, 0.0);
  for (int j = 0; j <= kSeriesTerms; ++j) {
    f += p * d[j];
    if (j > 0) g += p * (j * d[j - 1]);
    p *= u;
  }
  const std::complex<double> lead(0.0, 1.0 / k);
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  return {lead * f * norm, std::complex<double>(0.0, -1.0) * lead * g * norm};
}

bool StateFunctions::Impl::series_converged(double k) const {
  double f_sum = 0.0;
  double g_sum = 0.0;
  double f_last = 0.0;
  double g_last = 0.0;
  double p = 1.0;
  for (int j = 0; j <= kSeriesTerms; ++j) {
    const double tf = std::abs(d[j]) * p;
    const double tg = j > 0 ? std::abs(j * d[j - 1]) * p : 0.0;
    f_sum = std::max(f_sum, tf);
    g_sum = std::max(g_sum, tg);
    if (j > kSeriesTerms - 4) {
      f_last = std::max(f_last, tf);
      g_last = std::max(g_last, tg);
    }
    p /= k;
  }
  return f_last <= 1e-16 * f_sum && g_last <= 1e-16 * g_sum;
}

void StateFunctions::Impl::ensure_grid() {
  std::call_once(grid_once, [this] {
    double k = 0.25 * std::max({std::sqrt(std::abs(state.energy)), s, 1e-3});
    int steps = 0;
    while (!series_converged(k)) {
      k *= 1.2;
      if (++steps > 400) {
        throw ConvergenceError("large-k series for Phi does not converge", k,
                               0.0);
      }
    }
    // The series is asymptotic; confirm it against the grid sum and push
    // k up until the two agree.
    for (int attempt = 0;; ++attempt) {
      build_grid(k);
      double scale = 0.0;
      double dscale = 0.0;
      for (std::size_t i = 0; i < grid_x.size(); ++i) {
        scale += std::abs(grid_wpsi[i]);
        dscale += std::abs(grid_wpsi[i] * grid_x[i]);
      }
      scale /= std::sqrt(2.0 * kPi);
      dscale /= std::sqrt(2.0 * kPi);
      bool ok = true;
      for (double kk : {k, 1.3 * k}) {
        const auto a = grid_phi(kk);
        const auto b = series_phi(kk);
        if (std::abs(a.first - b.first) > 1e-13 * scale ||
            std::abs(a.second - b.second) > 1e-13 * dscale) {
          ok = false;
        }
      }
      if (ok) break;
      if (attempt >= 12) {
        throw ConvergenceError(
            "grid and large-k series for Phi disagree at every trial switch",
            k, 0.0);
      }
      k *= 1.5;
    }
    k_series = k;

    tail.coefficients.assign(kTailOrders, 0.0);
    for (int p = 0; p < kTailOrders; ++p) {
      double acc = 0.0;
      for (int j = 0; j <= 2 * p; ++j) {
        const double sign = ((p - j) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * d[j] * d[2 * p - j];
      }
      tail.coefficients[p] = acc / (2.0 * kPi);
    }
    const double floor = state.bc == Boundary::dirichlet
                             ? cfg.k_tail_switch_dirichlet
                             : cfg.k_tail_switch;
    tail_switch = std::max(floor, 64.0 * k_series);
  });
}

std::pair<std::complex<double>, std::complex<double>>
StateFunctions::Impl::phi_pair(double k) {
  ensure_grid();
  if (std::abs(k) >= k_series) return series_phi(k);
  return grid_phi(k);
}

PositionIntegrals StateFunctions::Impl::compute_position(
    const ToleranceConfig& c) const {
  std::vector<double> breaks{x_cut};
  breaks.insert(breaks.end(), nodes.begin(), nodes.end());
  breaks.push_back(0.0);
  const auto r = integrate_vector<6>(
      [this](double x) {
        const auto [p, dp] = eval(x);
        const double rho = p * p;
        return std::array<double, 6>{rho,
                                     rho > 0.0 ? -rho * std::log(rho) : 0.0,
                                     4.0 * dp * dp,
                                     rho * rho,
                                     x * rho,
                                     dp * dp};
      },
      breaks, c);
  PositionIntegrals out;
  out.norm = r.value[0];
  out.entropy = r.value[1];
  out.fisher = r.value[2];
  out.onicescu = r.value[3];
  out.mean_x = r.value[4];
  out.kinetic = r.value[5];
  out.error = r.error;
  return out;
}

MomentumIntegrals StateFunctions::Impl::compute_momentum(
    const ToleranceConfig& c) {
  ensure_grid();
  const double K =
      std::max(state.bc == Boundary::dirichlet ? c.k_tail_switch_dirichlet
                                               : c.k_tail_switch,
               64.0 * k_series);
  std::vector<double> breaks{0.0};
  for (double f = 1.0 / 16.0; f < 1.0; f *= 2.0) breaks.push_back(f * k_series);
  for (double k = k_series; k < K; k *= 2.0) breaks.push_back(k);
  breaks.push_back(K);
  const auto r = integrate_vector<4>(
      [this](double k) {
        const auto [ph, dph] = phi_pair(k);
        const double g = std::norm(ph);
        const double dg = 2.0 * std::real(std::conj(ph) * dph);
        return std::array<double, 4>{g, g > 0.0 ? -g * std::log(g) : 0.0,
                                     dg * dg / std::max(g, 1e-300), g * g};
      },
      breaks, c);
  MomentumIntegrals out;
  out.tail = momentum_tail_moments(tail, K);
  out.tail_switch = K;
  out.norm = 2.0 * r.value[0] + out.tail.probability;
  out.entropy = 2.0 * r.value[1] + out.tail.entropy;
  out.fisher = 2.0 * r.value[2] + out.tail.fisher;
  out.onicescu = 2.0 * r.value[3] + out.tail.onicescu;
  for (std::size_t i = 0; i < 4; ++i) out.error[i] = 2.0 * r.error[i];
  return out;
}

StateFunctions::StateFunctions(std::shared_ptr<Impl> impl)
    : impl_(std::move(impl)) {}

const BoundState& StateFunctions::state() const { return impl_->state; }
const ToleranceConfig& StateFunctions::config() const { return impl_->cfg; }

double StateFunctions::psi(double x) const { return impl_->eval(x).first; }
double StateFunctions::dpsi(double x) const { return impl_->eval(x).second; }
double StateFunctions::rho(double x) const {
  const double p = psi(x);
  return p * p;
}

std::complex<double> StateFunctions::phi(double k) const {
  return impl_->phi_pair(k).first;
}
std::complex<double> StateFunctions::dphi(double k) const {
  return impl_->phi_pair(k).second;
}
double StateFunctions::gamma(double k) const { return std::norm(phi(k)); }
double StateFunctions::dgamma(double k) const {
  const auto [ph, dph] = impl_->phi_pair(k);
  return 2.0 * std::real(std::conj(ph) * dph);
}

std::complex<double> StateFunctions::phi_direct(double k) const {
  const Impl* impl = impl_.get();
  return fourier_half_line([impl](double x) { return impl->eval(x).first; }, k,
                           impl->x_cut, impl->cfg,
                           [impl](double x) { return impl->local_length(x); });
}

double StateFunctions::x_cut() const { return impl_->x_cut; }
const std::vector<double>& StateFunctions::nodes() const {
  return impl_->nodes;
}

double StateFunctions::boundary_residual() const {
  const auto [p, dp] = impl_->eval(0.0);
  switch (impl_->state.bc) {
    case Boundary::dirichlet:
      return std::abs(p);
    case Boundary::neumann:
      return std::abs(dp);
    default:
      return std::abs(p - robin_sign(impl_->state.bc) * dp);
  }
}

double StateFunctions::k_series() const {
  impl_->ensure_grid();
  return impl_->k_series;
}
const MomentumTail& StateFunctions::momentum_tail() const {
  impl_->ensure_grid();
  return impl_->tail;
}
double StateFunctions::tail_switch() const {
  impl_->ensure_grid();
  return impl_->tail_switch;
}

const PositionIntegrals& StateFunctions::position_integrals() const {
  Impl* impl = impl_.get();
  std::call_once(impl->position_once,
                 [impl] { impl->position = impl->compute_position(impl->cfg); });
  return impl->position;
}

PositionIntegrals StateFunctions::position_integrals(
    const ToleranceConfig& cfg) const {
  if (cfg == impl_->cfg) return position_integrals();
  cfg.validate();
  return impl_->compute_position(cfg);
}

const MomentumIntegrals& StateFunctions::momentum_integrals() const {
  Impl* impl = impl_.get();
  std::call_once(impl->momentum_once,
                 [impl] { impl->momentum = impl->compute_momentum(impl->cfg); });
  return impl->momentum;
}

MomentumIntegrals StateFunctions::momentum_integrals(
    const ToleranceConfig& cfg) const {
  if (cfg == impl_->cfg) return momentum_integrals();
  cfg.validate();
  return impl_->compute_momentum(cfg);
}

StateFunctions build_state(const BoundState& state, const ToleranceConfig& cfg) {
  cfg.validate();
  auto impl = std::make_shared<StateFunctions::Impl>();
  impl->state = state;
  impl->cfg = cfg;
  const double log_threshold = std::log(cfg.x_cut_threshold);

  if (state.field == 0.0) {
    if (state.bc != Boundary::robin_minus || state.n != 0) {
      throw DomainError(
          "only the robin- ground level exists at zero field; field-induced "
          "levels collapse to delta(k)");
    }
    impl->field_free = true;
    impl->x_cut = log_threshold;
  } else {
    if (!(state.field > 0.0)) throw DomainError("field must be positive");
    const double s = std::cbrt(state.field);
    impl->s = s;
    impl->z0 = wall_argument(state);
    impl->zeta0 = airy_exponent(impl->z0);
    const ScaledAiry w = airy_scaled(impl->z0);
    switch (state.bc) {
      case Boundary::dirichlet:
        impl->c_scaled = std::sqrt(s) / w.ai_prime;
        break;
      case Boundary::neumann:
        impl->c_scaled = std::sqrt(s) / (std::sqrt(-impl->z0) * w.ai);
        break;
      default: {
        if (!(state.energy > -1.0)) {
          throw DomainError("Robin level must lie above E = -1");
        }
        if (std::abs(w.ai) <= 1e-12 * (s * std::abs(w.ai_prime))) {
          throw DomainError(
              "Ai vanishes at the wall: this root belongs to the Dirichlet "
              "spectrum");
        }
        impl->c_scaled = std::sqrt(state.field / (state.energy + 1.0)) / w.ai;
      }
    }

    // Support: |psi| relative to its peak drops below the threshold.
    const double ap1 = a_prime_zero(1);
    const double peak_ln = impl->z0 >= ap1 ? log_airy(impl->z0)
                                           : std::log(std::abs(airy(ap1).ai));
    const double target = peak_ln + log_threshold;
    const auto f = [target](double z) { return log_airy(z) - target; };
    const double lo = std::max(impl->z0, ap1);
    double hi = lo + 1.0;
    while (f(hi) > 0.0) hi = lo + 2.0 * (hi - lo);
    std::uintmax_t iterations = 200;
    const auto br = boost::math::tools::toms748_solve(
        f, lo, hi, f(lo), f(hi), boost::math::tools::eps_tolerance<double>(40),
        iterations);
    impl->x_cut = (impl->z0 - 0.5 * (br.first + br.second)) / s;

    for (int j = 1; a_zero(j) > impl->z0; ++j) {
      impl->nodes.push_back((impl->z0 - a_zero(j)) / s);
    }
  }

  const auto [p0, dp0] = impl->eval(0.0);
  impl->d.assign(kSeriesTerms + 1, 0.0);
  impl->d[0] = state.bc == Boundary::dirichlet ? 0.0 : p0;
  impl->d[1] = state.bc == Boundary::neumann ? 0.0 : dp0;
  for (int j = 0; j + 2 <= kSeriesTerms; ++j) {
    impl->d[j + 2] = -state.energy * impl->d[j] -
                     (j > 0 ? j * state.field * impl->d[j - 1] : 0.0);
  }
  return StateFunctions(std::move(impl));
}

double momentum_density_peak(const StateFunctions& sf) { return sf.gamma(0.0); }

std::vector<ExtremumInfo> extrema(const StateFunctions& sf, FieldRegime regime) {
  const BoundState& st = sf.state();
  if (!is_robin(st.bc)) {
    throw DomainError(
        "extrema: asymptotic seeds are defined for Robin walls only");
  }
  if (st.field == 0.0) throw DomainError("extrema: field must be positive");
  const double s = std::cbrt(st.field);
  const double root_s = std::sqrt(s);
  const int n = st.n;

  std::vector<ExtremumInfo> seeds;
  if (regime == FieldRegime::weak) {
    if (st.bc == Boundary::robin_minus) {
      if (n < 1) {
        throw DomainError(
            "extrema: the weak-field robin- ground state has no interior "
            "extremum");
      }
      const double an = a_zero(n);
      const double aip = airy(an).ai_prime;
      for (int m = 1; m <= n; ++m) {
        const double apm = a_prime_zero(m);
        seeds.push_back({m, 0.0, 0.0, (an - apm) / s - 1.0,
                         -airy(apm).ai / aip * root_s});
      }
    } else {
      const double an = a_zero(n + 1);
      const double aip = airy(an).ai_prime;
      for (int m = 1; m <= n + 1; ++m) {
        const double apm = a_prime_zero(m);
        seeds.push_back({m, 0.0, 0.0, (an - apm) / s + 1.0,
                         airy(apm).ai / aip * root_s});
      }
    }
  } else {
    const double ap = a_prime_zero(n + 1);
    const double delta =
        (st.bc == Boundary::robin_plus ? 1.0 : -1.0) / (ap * s);
    const double amp = root_s / (std::sqrt(-ap) * airy(ap).ai);
    for (int m = 0; m <= n; ++m) {
      const double apm = a_prime_zero(m + 1);
      seeds.push_back({m, 0.0, 0.0, (ap - apm) / s + delta / s,
                       amp * airy(apm).ai});
    }
  }

  std::vector<ExtremumInfo> out;
  for (ExtremumInfo e : seeds) {
    if (!(e.seed_x < 0.0)) continue;
    double x = e.seed_x;
    for (int iter = 0; iter < 100; ++iter) {
      const double p = sf.psi(x);
      const double dp = sf.dpsi(x);
      const double d2p = -(st.energy + st.field * x) * p;
      const double step = dp / d2p;
      x -= step;
      if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) break;
    }
    if (std::abs(x - e.seed_x) > 0.2 * std::abs(e.seed_x)) {
      throw DomainError("extrema: seed for m = " + std::to_string(e.m) +
                        " moved by more than 20%; the field does not fit the "
                        "requested regime");
    }
    if (std::abs(sf.dpsi(x)) > 1e-8) {
      throw ConvergenceError("extrema: Newton refinement did not converge", x,
                             std::abs(sf.dpsi(x)));
    }
    e.x = x;
    e.psi_value = sf.psi(x);
    out.push_back(e);
  }
  return out;
}

}  // namespace robinwall
