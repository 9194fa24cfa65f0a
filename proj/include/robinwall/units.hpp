#pragma once

#include "robinwall/spectrum.hpp"

namespace robinwall {

/// CODATA 2018.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double speed_of_light = 299792458.0;       // m/s
inline constexpr double electron_mass = 9.1093837015e-31;   // kg
inline constexpr double neutron_mass = 1.67492749804e-27;   // kg
}  // namespace constants

/// Physical scale behind the dimensionless quantities. Lengths are measured
/// in |Lambda|, or in the reduced Compton length hbar/(mc) when `compton`
/// is set (the only option for Dirichlet and Neumann walls).
struct UnitScale {
  double lambda_abs = 1e-9;  // m
  double mass = constants::electron_mass;
  /// Linear potential m g x instead of e F x: field values are accelerations.
  bool gravity = false;
  bool compton = false;
  Boundary bc = Boundary::robin_minus;

  double length_unit() const;
  /// hbar^2/(2 m L^2), J.
  double energy_unit() const;
  /// hbar^2/(2 e m L^3) in V/m, or hbar^2/(2 m^2 L^3) in m/s^2.
  double field_unit() const;
  /// e L in C m, or m L in kg m.
  double dipole_unit() const;
};

enum class UnitKind { length, energy, field, dipole };
enum class UnitDirection { to_dimensionless, to_physical };

UnitKind parse_unit_kind(std::string_view name);

double convert_units(const UnitScale& scale, UnitDirection direction,
                     double value, UnitKind kind);

}  // namespace robinwall
