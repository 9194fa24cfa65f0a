#pragma once

#include <array>
#include <complex>
#include <memory>
#include <vector>

#include "robinwall/quadrature.hpp"
#include "robinwall/spectrum.hpp"

namespace robinwall {

/// Position-space integrals over [x_cut, 0].
struct PositionIntegrals {
  double norm = 0.0;      // int rho
  double entropy = 0.0;   // -int rho ln rho
  double fisher = 0.0;    // 4 int psi'^2
  double onicescu = 0.0;  // int rho^2
  double mean_x = 0.0;    // int x rho
  double kinetic = 0.0;   // int psi'^2
  std::array<double, 6> error{};
};

/// Momentum-space integrals over the whole k axis, analytic tail included.
struct MomentumIntegrals {
  double norm = 0.0;
  double entropy = 0.0;
  double fisher = 0.0;  // int gamma'^2/gamma
  double onicescu = 0.0;
  std::array<double, 4> error{};
  /// |k| > tail_switch contribution that is already folded in above.
  TailMoments tail;
  double tail_switch = 0.0;
};

/// Normalized wavefunctions of one bound level. Cheap to copy; copies
/// share the memoized momentum grid and integrals, which are filled once
/// under a lock so concurrent readers always see identical values.
class StateFunctions {
 public:
  const BoundState& state() const;
  const ToleranceConfig& config() const;

  /// psi(x) for x <= 0 (0 for x > 0), positive at the wall side.
  double psi(double x) const;
  double dpsi(double x) const;
  double rho(double x) const;

  /// Phi(k) = (2 pi)^{-1/2} int e^{-ikx} psi dx and its k-derivative.
  std::complex<double> phi(double k) const;
  std::complex<double> dphi(double k) const;
  double gamma(double k) const;
  double dgamma(double k) const;

  /// Phi(k) from the adaptive half-line transform (slow; for cross-checks).
  std::complex<double> phi_direct(double k) const;

  /// Left end of the position support (|psi| below threshold beyond it).
  double x_cut() const;
  /// Interior zeros of psi, increasing.
  const std::vector<double>& nodes() const;

  /// psi(0) - sign psi'(0) for Robin, psi(0) for Dirichlet, psi'(0) for
  /// Neumann.
  double boundary_residual() const;

  /// |k| above which Phi comes from the exact large-k series.
  double k_series() const;
  /// gamma(k) ~ sum_p c_p k^{-2p-2}.
  const MomentumTail& momentum_tail() const;
  /// K: start of the closed-form tail.
  double tail_switch() const;

  /// Memoized for the build configuration; a different `cfg` recomputes.
  const PositionIntegrals& position_integrals() const;
  PositionIntegrals position_integrals(const ToleranceConfig& cfg) const;
  const MomentumIntegrals& momentum_integrals() const;
  MomentumIntegrals momentum_integrals(const ToleranceConfig& cfg) const;

  struct Impl;

 private:
  friend StateFunctions build_state(const BoundState&, const ToleranceConfig&);
  explicit StateFunctions(std::shared_ptr<Impl> impl);
  std::shared_ptr<Impl> impl_;
};

/// Closed-form normalization; refuses a Robin level whose Ai(z0) vanishes.
StateFunctions build_state(const BoundState& state,
                           const ToleranceConfig& cfg = {});

/// gamma(0).
double momentum_density_peak(const StateFunctions& sf);

struct ExtremumInfo {
  int m = 0;
  double x = 0.0;
  double psi_value = 0.0;
  /// Asymptotic formula before refinement.
  double seed_x = 0.0;
  double seed_psi_value = 0.0;
};

/// Interior extrema of psi: seeded from the weak/strong field formulas and
/// refined by Newton on psi'. Throws DomainError when a seed moves by more
/// than 20% (regime does not fit the field).
std::vector<ExtremumInfo> extrema(const StateFunctions& sf, FieldRegime regime);

}  // namespace robinwall
