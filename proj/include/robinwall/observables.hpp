#pragma once

#include <vector>

#include "robinwall/quadrature.hpp"
#include "robinwall/spectrum.hpp"
#include "robinwall/states.hpp"

namespace robinwall {

struct PolarizationRecord {
  BoundState state;
  double mean_x = 0.0;
  /// <x> at zero field: -1/2 for the robin- ground level, 0 for every
  /// field-induced level.
  double zero_field_mean_x = 0.0;
  /// mean_x - zero_field_mean_x, in units of e|Lambda|.
  double P = 0.0;
};

/// Closed-form <x> (Robin from E and field, Dirichlet/Neumann from the Airy
/// zeros), checked against quadrature of x rho to 1e-6. Falls back to
/// quadrature at the E = -1 pole of the Robin formula.
PolarizationRecord polarization(const BoundState& state,
                                const ToleranceConfig& cfg = {});

/// <x> from the quadrature of x rho alone.
double mean_x_quadrature(const StateFunctions& sf);

/// -dE/dfield by central differences, h = max(1e-4 field, 1e-6).
double hellmann_feynman_mean_x(Boundary bc, int n, double field);

struct DipoleMatrix {
  Boundary bc = Boundary::dirichlet;
  double field = 0.0;
  int dimension = 0;
  /// Row-major, dimension x dimension.
  std::vector<double> entries;

  double at(int n, int m) const {
    return entries[static_cast<std::size_t>(n * dimension + m)];
  }
};

/// Closed-form P_nm for n, m < N. Elements with n, m <= 3 are
/// re-derived by quadrature and must agree to 1e-6.
DipoleMatrix dipole_matrix(Boundary bc, double field, int N,
                           const ToleranceConfig& cfg = {});

/// int x psi_a psi_b dx by quadrature.
double dipole_element_quadrature(const StateFunctions& a,
                                 const StateFunctions& b,
                                 const ToleranceConfig& cfg = {});

struct CouplingAsymptote {
  double value = 0.0;
  /// |a_n| field^{2/3} lies in the crossover window [0.5, 2].
  bool low_accuracy = false;
};

/// Weak-field robin- P_0n: sqrt(2 field) below the crossover,
/// (2/|a_n|^3)^{1/2} field^{-1/2} above it.
CouplingAsymptote ground_coupling_asymptote(int n, double field);

}  // namespace robinwall
