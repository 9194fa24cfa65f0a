#pragma once

#include <utility>
#include <vector>

#include "robinwall/quadrature.hpp"
#include "robinwall/spectrum.hpp"
#include "robinwall/states.hpp"

namespace robinwall {

/// Information measures of one level in both spaces.
struct InfoRecord {
  double S_x = 0.0;
  double S_k = 0.0;
  double S_t = 0.0;
  double I_x = 0.0;
  double I_k = 0.0;
  double fisher_product = 0.0;
  double O_x = 0.0;
  double O_k = 0.0;
  double onicescu_product = 0.0;
  double CGL_x = 0.0;
  double CGL_k = 0.0;
  double CGL_product = 0.0;
};

/// 1 + ln pi: lower bound on S_x + S_k.
double entropic_bound();

std::pair<double, double> shannon(const StateFunctions& sf,
                                  const ToleranceConfig& cfg);
/// I_x from the closed form, cross-checked against 4 int psi'^2 (relative
/// 1e-6, ConsistencyError otherwise); I_k by quadrature plus tail.
std::pair<double, double> fisher(const StateFunctions& sf,
                                 const ToleranceConfig& cfg);
std::pair<double, double> onicescu(const StateFunctions& sf,
                                   const ToleranceConfig& cfg);

struct Complexity {
  double x = 0.0;
  double k = 0.0;
  double product = 0.0;
};
/// e^{S} O in each space; needs S and O filled in.
Complexity cgl(const InfoRecord& info);

/// Every measure of `sf`, computed from one set of integrals.
InfoRecord info_record(const StateFunctions& sf, const ToleranceConfig& cfg);
InfoRecord info_record(const StateFunctions& sf);

/// Position Fisher information from E alone: Robin
/// (4/3)(E + E^2 +/- 2F)/(E+1) (+ for robin-),
/// Dirichlet/Neumann (4/3)E, 4 for the field-free robin- level.
double fisher_position_analytic(const BoundState& state);

struct FlatWell {
  double S_x = 0.0;
  double S_k = 0.0;
  double S_t = 0.0;
};
/// Entropies of the infinite well of width 2|a_1|/field^{1/3} that mimics
/// the Dirichlet ground state.
FlatWell flat_well_approximation(double field);

/// Momentum entropy of the unit-width infinite well ground state.
inline constexpr double kUnitWellMomentumEntropy = 2.5189;

/// Field where S_t of the robin- levels 0 and 1 cross (bisection on
/// [0.1, 5] to 1e-3). BracketError if the difference keeps its sign.
double entropy_crossing(const ToleranceConfig& cfg = {});

struct FisherMaximum {
  double field = 0.0;
  double value = 0.0;
  /// Final golden-section bracket in field.
  std::pair<double, double> bracket{0.0, 0.0};
};
/// Maximum of I_x I_k of robin- level n (n >= 1) over field in (1e-4, 1).
FisherMaximum fisher_product_maximum(int n, const ToleranceConfig& cfg = {});

struct FisherLimits {
  double zero_field = 0.0;
  double large_field = 0.0;
};
/// I_x I_k of robin- level n (n >= 1) extrapolated to field -> 0 (in
/// field^{1/3}) and field -> inf (in field^{-1/3}).
FisherLimits fisher_product_limits(int n, const ToleranceConfig& cfg = {});

/// C_n with I_k = C_n field^{-2/3} for Dirichlet/Neumann levels.
double momentum_fisher_coefficient(Boundary bc, int n,
                                   const ToleranceConfig& cfg = {});

/// Value at t = 0 of the polynomial through (t_i, y_i).
double polynomial_limit(const std::vector<double>& t,
                        const std::vector<double>& y);

}  // namespace robinwall
