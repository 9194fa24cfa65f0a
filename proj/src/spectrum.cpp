#include "robinwall/spectrum.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "robinwall/errors.hpp"
#include "robinwall/special_functions.hpp"

namespace robinwall {

namespace {

double a_zero(int n) { return airy_root(AiryZeroKind::ai, n); }
double a_prime_zero(int n) { return airy_root(AiryZeroKind::ai_prime, n); }

void require_field(double field) {
  if (!std::isfinite(field) || field <= 0.0) {
    throw DomainError(
        "field must be positive and finite (non-positive fields have a "
        "continuous spectrum)");
  }
}

void require_level(int n) {
  if (n < 0) throw DomainError("quantum number must be non-negative");
}

// Refine a sign change of F on [lo, hi] to full precision.
std::pair<double, double> polish(Boundary bc, double field, double lo, double hi,
                                 double f_lo, double f_hi) {
  std::uintmax_t iterations = 300;
  const auto f = [&](double e) { return eigen_function(bc, e, field); };
  return boost::math::tools::toms748_solve(
      f, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(52),
      iterations);
}

BoundState finish(Boundary bc, int n, double field, double root,
                  std::pair<double, double> bracket) {
  BoundState s{bc, n, field, root, 0.0, bracket};
  const double c = std::cbrt(field);
  const ScaledAiry v = airy_scaled(-root / (c * c));
  s.residual = std::abs(eigen_function(bc, root, field)) /
               (c * std::abs(v.ai_prime) + std::abs(v.ai));
  return s;
}

// Scan fallback used when the interlacing bracket does not show a sign
// change (should not happen in exact arithmetic).
BoundState scan_for_level(Boundary bc, int n, double field) {
  const double s2 = std::cbrt(field) * std::cbrt(field);
  const double e_min = std::min(-2.0, -1.0 - std::sqrt(field));
  const double e_max = -s2 * a_zero(n + 2);
  const double min_spacing = a_zero(n + 1) - a_zero(n + 2);
  const double step = 0.2 * s2 * min_spacing;
  std::vector<std::pair<double, double>> trace;
  double prev_e = e_min;
  double prev_f = eigen_function(bc, prev_e, field);
  trace.emplace_back(prev_e, prev_f);
  for (double e = e_min + step; e <= e_max + step; e += step) {
    const double f = eigen_function(bc, e, field);
    trace.emplace_back(e, f);
    if ((prev_f < 0.0) != (f < 0.0)) {
      const auto br = polish(bc, field, prev_e, e, prev_f, f);
      BoundState candidate = finish(bc, n, field, 0.5 * (br.first + br.second),
                                    {prev_e, e});
      if (node_count(candidate) == n) return candidate;
    }
    prev_e = e;
    prev_f = f;
  }
  throw BracketError("no sign change of the eigenvalue function isolates level " +
                         std::to_string(n) + " of " +
                         std::string(to_string(bc)),
                     std::move(trace));
}

}  // namespace

std::string_view to_string(Boundary bc) {
  switch (bc) {
    case Boundary::dirichlet:
      return "dirichlet";
    case Boundary::neumann:
      return "neumann";
    case Boundary::robin_minus:
      return "robin-";
    case Boundary::robin_plus:
      return "robin+";
  }
  return "?";
}

Boundary parse_boundary(std::string_view name) {
  if (name == "dirichlet" || name == "D") return Boundary::dirichlet;
  if (name == "neumann" || name == "N") return Boundary::neumann;
  if (name == "robin-" || name == "robin_minus" || name == "R-") {
    return Boundary::robin_minus;
  }
  if (name == "robin+" || name == "robin_plus" || name == "R+") {
    return Boundary::robin_plus;
  }
  throw DomainError("unknown boundary condition '" + std::string(name) +
                    "' (expected dirichlet, neumann, robin- or robin+)");
}

bool is_robin(Boundary bc) {
  return bc == Boundary::robin_minus || bc == Boundary::robin_plus;
}

int robin_sign(Boundary bc) {
  switch (bc) {
    case Boundary::robin_minus:
      return 1;
    case Boundary::robin_plus:
      return -1;
    default:
      return 0;
  }
}

double eigen_function(Boundary bc, double E, double field) {
  if (!is_robin(bc)) {
    throw DomainError("eigen_function is defined for Robin walls only");
  }
  const double s = std::cbrt(field);
  const ScaledAiry v = airy_scaled(-E / (s * s));
  return s * v.ai_prime + robin_sign(bc) * v.ai;
}

BoundState energy(Boundary bc, int n, double field) {
  require_level(n);
  if (field == 0.0 && bc == Boundary::robin_minus && n == 0) {
    return BoundState{bc, 0, 0.0, -1.0, 0.0, {-1.0, -1.0}};
  }
  if (field == 0.0 && bc == Boundary::robin_minus) {
    throw DomainError(
        "field-induced levels (n >= 1) do not exist at zero field: the E = 0 "
        "solution is not normalizable");
  }
  require_field(field);
  const double s2 = std::cbrt(field) * std::cbrt(field);

  if (bc == Boundary::dirichlet || bc == Boundary::neumann) {
    const double z = bc == Boundary::dirichlet ? a_zero(n + 1)
                                               : a_prime_zero(n + 1);
    const double e = -s2 * z;
    return BoundState{bc, n, field, e, 0.0, {e, e}};
  }

  // Interlacing: E^D_{n-1} < E^{R-}_n < E^N_n < E^{R+}_n < E^D_n.
  double lo = 0.0;
  double hi = 0.0;
  if (bc == Boundary::robin_plus) {
    lo = -s2 * a_prime_zero(n + 1);
    hi = -s2 * a_zero(n + 1);
  } else {
    lo = n == 0 ? std::min(-2.0, -1.0 - std::sqrt(field)) : -s2 * a_zero(n);
    hi = -s2 * a_prime_zero(n + 1);
  }
  const double f_lo = eigen_function(bc, lo, field);
  const double f_hi = eigen_function(bc, hi, field);
  BoundState state;
  if ((f_lo < 0.0) != (f_hi < 0.0) && f_lo != 0.0 && f_hi != 0.0) {
    const auto br = polish(bc, field, lo, hi, f_lo, f_hi);
    const double root = std::abs(eigen_function(bc, br.first, field)) <=
                                std::abs(eigen_function(bc, br.second, field))
                            ? br.first
                            : br.second;
    state = finish(bc, n, field, root, {lo, hi});
  } else {
    state = scan_for_level(bc, n, field);
  }
  if (state.residual > 1e-11) {
    throw ConsistencyError("eigenvalue residual " +
                           std::to_string(state.residual) +
                           " too large; root is not converged");
  }
  const int nodes = node_count(state);
  if (nodes != n) {
    throw ConsistencyError("level " + std::to_string(n) + " has " +
                           std::to_string(nodes) + " nodes");
  }
  return state;
}

double energy_asymptotic(Boundary bc, int n, double field, FieldRegime regime) {
  require_level(n);
  if (!is_robin(bc)) {
    throw DomainError(
        "energy_asymptotic: Dirichlet and Neumann levels are already closed "
        "form; use energy()");
  }
  require_field(field);
  const double s = std::cbrt(field);
  const bool minus = bc == Boundary::robin_minus;
  if (regime == FieldRegime::weak) {
    if (minus && n == 0) return -1.0 + field / 2.0 - field * field / 8.0;
    if (minus) return -a_zero(n) * s * s + field;
    return -a_zero(n + 1) * s * s - field;
  }
  const double ap = a_prime_zero(n + 1);
  const double correction = 1.0 / (ap * ap * s);
  return -ap * s * s * (minus ? 1.0 - correction : 1.0 + correction);
}

double level_spacing(Boundary bc, int n, double field) {
  return energy(bc, n + 1, field).energy - energy(bc, n, field).energy;
}

double level_spacing_weak(int n, double field) {
  if (n < 1) throw DomainError("level_spacing_weak: n must be >= 1");
  require_field(field);
  const double s = std::cbrt(field);
  return s * s * (a_zero(n) - a_zero(n + 1));
}

double zero_energy_field() {
  const double g1 = gamma_fn(1.0 / 3.0);
  const double g2 = gamma_fn(2.0 / 3.0);
  return g1 * g1 * g1 / (3.0 * g2 * g2 * g2);
}

double zero_energy_field_numeric() {
  const auto e0 = [](double f) {
    return energy(Boundary::robin_minus, 0, f).energy;
  };
  std::uintmax_t iterations = 200;
  const auto br = boost::math::tools::toms748_solve(
      e0, 1.0, 5.0, e0(1.0), e0(5.0),
      boost::math::tools::eps_tolerance<double>(50), iterations);
  return 0.5 * (br.first + br.second);
}

double wall_argument(const BoundState& state) {
  if (state.field == 0.0) return std::numeric_limits<double>::infinity();
  switch (state.bc) {
    case Boundary::dirichlet:
      return a_zero(state.n + 1);
    case Boundary::neumann:
      return a_prime_zero(state.n + 1);
    default: {
      const double s = std::cbrt(state.field);
      return -state.energy / (s * s);
    }
  }
}

int node_count(const BoundState& state) {
  const double z0 = wall_argument(state);
  int count = 0;
  // psi vanishes where the Airy argument hits a zero above the wall value.
  while (a_zero(count + 1) > z0) ++count;
  return count;
}

}  // namespace robinwall
