#pragma once

#include <string>
#include <string_view>
#include <utility>

namespace robinwall {

/// Wall type. Robin walls are written in units of |Lambda|:
/// robin_minus (Lambda < 0) means psi'(0) = psi(0), robin_plus means
/// -psi'(0) = psi(0).
enum class Boundary { dirichlet, neumann, robin_minus, robin_plus };

/// "dirichlet", "neumann", "robin-", "robin+".
std::string_view to_string(Boundary bc);
/// Accepts the names above (plus a few aliases); throws DomainError.
Boundary parse_boundary(std::string_view name);

bool is_robin(Boundary bc);

/// +1 for robin_minus, -1 for robin_plus, 0 otherwise: psi'(0) = sign psi(0).
int robin_sign(Boundary bc);

/// One bound level E_n(field).
struct BoundState {
  Boundary bc = Boundary::dirichlet;
  int n = 0;
  double field = 0.0;
  double energy = 0.0;
  /// |F(E)| of the eigenvalue function at the returned energy.
  double residual = 0.0;
  /// Energy interval the root was isolated in.
  std::pair<double, double> bracket{0.0, 0.0};
};

/// Solve for the n-th level. Dirichlet/Neumann come straight from the Airy
/// zeros; Robin levels are isolated between neighbouring Dirichlet and
/// Neumann levels and polished with TOMS 748. The field-free robin_minus
/// ground state (field == 0, n == 0) is the only zero-field level.
BoundState energy(Boundary bc, int n, double field);

/// Exponentially scaled eigenvalue function for Robin walls,
/// F(E) = field^{1/3} Ai'(z) +/- Ai(z), z = -E/field^{2/3}, multiplied by
/// exp((2/3) z^{3/2}) when z > 0. Sign: + for robin_minus.
double eigen_function(Boundary bc, double E, double field);

enum class FieldRegime { weak, strong };

/// Closed-form weak/strong-field expansion of a Robin level.
double energy_asymptotic(Boundary bc, int n, double field, FieldRegime regime);

/// E_{n+1} - E_n at the given field.
double level_spacing(Boundary bc, int n, double field);

/// field^{2/3} (a_n - a_{n+1}): weak-field spacing of the field-induced
/// Robin levels (n >= 1).
double level_spacing_weak(int n, double field);

/// Gamma^3(1/3) / (3 Gamma^3(2/3)): field at which E_0 of robin_minus
/// crosses zero.
double zero_energy_field();

/// The same field found as the root of E_0(field) = 0 with the solver.
double zero_energy_field_numeric();

/// Airy argument at the wall, z0 = -E/field^{2/3} (exactly a_{n+1} or
/// a'_{n+1} for Dirichlet/Neumann). +inf for the field-free level.
double wall_argument(const BoundState& state);

/// Number of zeros of the level's wavefunction on (-inf, 0).
int node_count(const BoundState& state);

}  // namespace robinwall
