#include "robinwall/units.hpp"

#include <cmath>
#include <string>

#include "robinwall/errors.hpp"

namespace robinwall {

namespace {

void validate(const UnitScale& s) {
  if (!(s.mass > 0.0) || !std::isfinite(s.mass)) {
    throw DomainError("unit scale: mass must be positive");
  }
  if (!s.compton) {
    if (!is_robin(s.bc)) {
      throw DomainError(
          "unit scale: Dirichlet and Neumann walls have no |Lambda|; use the "
          "Compton convention");
    }
    if (!(s.lambda_abs > 0.0) || !std::isfinite(s.lambda_abs)) {
      throw DomainError("unit scale: |Lambda| must be positive");
    }
  }
}

}  // namespace

double UnitScale::length_unit() const {
  validate(*this);
  return compton ? constants::hbar / (mass * constants::speed_of_light)
                 : lambda_abs;
}

double UnitScale::energy_unit() const {
  const double L = length_unit();
  return constants::hbar * constants::hbar / (2.0 * mass * L * L);
}

double UnitScale::field_unit() const {
  const double L = length_unit();
  const double base = constants::hbar * constants::hbar / (2.0 * mass * L * L * L);
  return gravity ? base / mass : base / constants::elementary_charge;
}

double UnitScale::dipole_unit() const {
  const double L = length_unit();
  return (gravity ? mass : constants::elementary_charge) * L;
}

UnitKind parse_unit_kind(std::string_view name) {
  if (name == "length") return UnitKind::length;
  if (name == "energy") return UnitKind::energy;
  if (name == "field") return UnitKind::field;
  if (name == "dipole") return UnitKind::dipole;
  throw DomainError("unknown unit kind '" + std::string(name) +
                    "' (expected length, energy, field or dipole)");
}

double convert_units(const UnitScale& scale, UnitDirection direction,
                     double value, UnitKind kind) {
  double unit = 0.0;
  switch (kind) {
    case UnitKind::length:
      unit = scale.length_unit();
      break;
    case UnitKind::energy:
      unit = scale.energy_unit();
      break;
    case UnitKind::field:
      unit = scale.field_unit();
      break;
    case UnitKind::dipole:
      unit = scale.dipole_unit();
      break;
  }
  return direction == UnitDirection::to_physical ? value * unit : value / unit;
}

}  // namespace robinwall
