#include "robinwall/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "robinwall/errors.hpp"
#include "robinwall/special_functions.hpp"

namespace robinwall {

namespace {

double a_zero(int n) { return airy_root(AiryZeroKind::ai, n); }
double a_prime_zero(int n) { return airy_root(AiryZeroKind::ai_prime, n); }

double zero_field_reference(const BoundState& st) {
  return st.bc == Boundary::robin_minus && st.n == 0 ? -0.5 : 0.0;
}

void check_close(double analytic, double numeric, const char* what) {
  const double tol = 1e-6 * std::max(1.0, std::abs(analytic));
  if (!(std::abs(analytic - numeric) <= tol)) {
    throw ConsistencyError(std::string(what) + ": closed form " +
                           std::to_string(analytic) + " vs quadrature " +
                           std::to_string(numeric));
  }
}

double robin_element(double field, double en, double em) {
  const double d = en - em;
  return field / std::sqrt((en + 1.0) * (em + 1.0)) * (en + em + 2.0) / (d * d);
}

}  // namespace

double mean_x_quadrature(const StateFunctions& sf) {
  return sf.position_integrals().mean_x;
}

namespace {

// Returns false at the E = -1 pole of the Robin formula.
bool closed_mean_x(const BoundState& state, double& mean_x) {
  const double E = state.energy;
  const double field = state.field;
  switch (state.bc) {
    case Boundary::dirichlet:
      mean_x = (2.0 / 3.0) * a_zero(state.n + 1) / std::cbrt(field);
      return true;
    case Boundary::neumann:
      mean_x = (2.0 / 3.0) * a_prime_zero(state.n + 1) / std::cbrt(field);
      return true;
    default:
      if (field == 0.0 || E == -1.0) return false;
      mean_x = -(2.0 * E * (E + 1.0) / field + robin_sign(state.bc)) /
               (3.0 * (E + 1.0));
      return true;
  }
}

}  // namespace

PolarizationRecord polarization(const BoundState& state,
                                const ToleranceConfig& cfg) {
  PolarizationRecord rec{state, 0.0, zero_field_reference(state), 0.0};
  const bool closed_form = closed_mean_x(state, rec.mean_x);
  const double numeric = mean_x_quadrature(build_state(state, cfg));
  if (closed_form) {
    check_close(rec.mean_x, numeric, "polarization");
  } else {
    rec.mean_x = numeric;
  }
  rec.P = rec.mean_x - rec.zero_field_mean_x;
  return rec;
}

double hellmann_feynman_mean_x(Boundary bc, int n, double field) {
  const double h = std::max(1e-4 * field, 1e-6);
  if (!(field > h)) {
    throw DomainError("hellmann_feynman_mean_x: field too small for a central "
                      "difference");
  }
  const double up = energy(bc, n, field + h).energy;
  const double down = energy(bc, n, field - h).energy;
  return -(up - down) / (2.0 * h);
}

double dipole_element_quadrature(const StateFunctions& a,
                                 const StateFunctions& b,
                                 const ToleranceConfig& cfg) {
  std::vector<double> breaks{std::min(a.x_cut(), b.x_cut())};
  breaks.insert(breaks.end(), a.nodes().begin(), a.nodes().end());
  breaks.insert(breaks.end(), b.nodes().begin(), b.nodes().end());
  breaks.push_back(0.0);
  std::sort(breaks.begin(), breaks.end());
  const auto r = integrate_vector<1>(
      [&](double x) {
        return std::array<double, 1>{x * a.psi(x) * b.psi(x)};
      },
      breaks, cfg);
  return r.value[0];
}

DipoleMatrix dipole_matrix(Boundary bc, double field, int N,
                           const ToleranceConfig& cfg) {
  if (N < 2) throw DomainError("dipole_matrix: N must be at least 2");
  if (!(field > 0.0)) throw DomainError("dipole_matrix: field must be positive");
  DipoleMatrix M{bc, field, N,
                 std::vector<double>(static_cast<std::size_t>(N * N), 0.0)};
  std::vector<BoundState> levels;
  for (int n = 0; n < N; ++n) levels.push_back(energy(bc, n, field));
  const double inv_s = 1.0 / std::cbrt(field);

  for (int n = 0; n < N; ++n) {
    for (int m = n; m < N; ++m) {
      double v = 0.0;
      if (n == m) {
        if (!closed_mean_x(levels[n], v)) v = polarization(levels[n], cfg).mean_x;
      } else if (bc == Boundary::dirichlet) {
        const double d = a_zero(n + 1) - a_zero(m + 1);
        v = 2.0 * inv_s / (d * d);
      } else if (bc == Boundary::neumann) {
        const double an = a_prime_zero(n + 1);
        const double am = a_prime_zero(m + 1);
        v = -(an + am) / (std::sqrt(an * am) * (an - am) * (an - am)) * inv_s;
      } else {
        v = robin_element(field, levels[n].energy, levels[m].energy);
      }
      M.entries[static_cast<std::size_t>(n * N + m)] = v;
      M.entries[static_cast<std::size_t>(m * N + n)] = v;
    }
  }

  const int checked = std::min(N, 4);
  std::vector<StateFunctions> states;
  for (int n = 0; n < checked; ++n) states.push_back(build_state(levels[n], cfg));
  for (int n = 0; n < checked; ++n) {
    check_close(M.at(n, n), mean_x_quadrature(states[n]), "dipole_matrix");
    for (int m = n + 1; m < checked; ++m) {
      check_close(M.at(n, m), dipole_element_quadrature(states[n], states[m], cfg),
                  "dipole_matrix");
    }
  }
  return M;
}

CouplingAsymptote ground_coupling_asymptote(int n, double field) {
  if (n < 1) throw DomainError("ground_coupling_asymptote: n must be >= 1");
  if (!(field > 0.0)) {
    throw DomainError("ground_coupling_asymptote: field must be positive");
  }
  const double an = std::abs(a_zero(n));
  const double x = an * std::cbrt(field) * std::cbrt(field);
  CouplingAsymptote out;
  out.low_accuracy = x >= 0.5 && x <= 2.0;
  out.value = x < 1.0 ? std::sqrt(2.0 * field)
                      : std::sqrt(2.0 / (an * an * an) / field);
  return out;
}

}  // namespace robinwall
