#include "robinwall/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "robinwall/errors.hpp"
#include "robinwall/special_functions.hpp"

namespace robinwall {

namespace {

struct Solution {
  std::vector<double> x;
  std::vector<double> energies;
  // Column-major, one column of W^{1/2} psi per level.
  std::vector<double> vectors;
  int rows = 0;
};

Solution solve(Boundary bc, double field, int levels, double x_min, int N) {
  const double h = -x_min / (N - 1);
  const double inv_h2 = 1.0 / (h * h);
  // Dirichlet drops the wall point; the far end is always Dirichlet.
  const int first = bc == Boundary::dirichlet ? 1 : 0;
  const int rows = N - 1 - first;
  if (levels > rows) throw DomainError("fd_energies: grid too small");

  std::vector<double> diag(rows);
  std::vector<double> off(std::max(rows - 1, 1));
  Solution sol;
  sol.rows = rows;
  for (int r = 0; r < rows; ++r) {
    const double x = -(r + first) * h;
    sol.x.push_back(x);
    diag[r] = 2.0 * inv_h2 - field * x;
    if (r + 1 < rows) off[r] = -inv_h2;
  }
  if (first == 0) {
    // Ghost point psi_{-1} = psi_1 + 2 h sigma psi_0, symmetrized by
    // W = diag(1/2, 1, 1, ...).
    const double sigma = robin_sign(bc);
    diag[0] = (2.0 - 2.0 * h * sigma) * inv_h2;
    off[0] = -std::sqrt(2.0) * inv_h2;
  }

  sol.energies.assign(levels, 0.0);
  sol.vectors.assign(static_cast<std::size_t>(rows) * levels, 0.0);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(levels));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, 'V', 'I', rows, diag.data(), off.data(), 0.0, 0.0, 1,
      levels, 0.0, &found, sol.energies.data(), sol.vectors.data(), rows,
      support.data());
  if (info != 0 || found != levels) {
    throw ConvergenceError("fd_energies: tridiagonal eigensolver failed",
                           static_cast<double>(info), 0.0);
  }

  for (int l = 0; l < levels; ++l) {
    const double* u = &sol.vectors[static_cast<std::size_t>(l) * rows];
    double peak = 0.0;
    double tail = 0.0;
    for (int r = 0; r < rows; ++r) {
      peak = std::max(peak, std::abs(u[r]));
      if (sol.x[r] <= 0.95 * x_min) tail = std::max(tail, std::abs(u[r]));
    }
    if (tail > 1e-6 * peak) {
      std::ostringstream msg;
      msg << "fd_energies: level " << l << " has not decayed at x_min = "
          << x_min << "; try x_min = " << 1.5 * x_min;
      throw DomainError(msg.str());
    }
  }
  return sol;
}

void require(double field, int count) {
  if (!(field > 0.0)) throw DomainError("oracle: field must be positive");
  if (count < 1) throw DomainError("oracle: need at least one level");
}

double moment(const Solution& sol, int level, int power) {
  const double h = std::abs(sol.x[1] - sol.x[0]);
  const double* u = &sol.vectors[static_cast<std::size_t>(level) * sol.rows];
  double norm = 0.0;
  double acc = 0.0;
  for (int r = 0; r < sol.rows; ++r) {
    const double w = u[r] * u[r] * h;
    norm += w;
    acc += w * std::pow(sol.x[r], power);
  }
  return acc / norm;
}

}  // namespace

GridSpec GridSpec::make(double x_min, int N) {
  if (!(x_min < 0.0) || N < 3) {
    throw DomainError("GridSpec: need x_min < 0 and N >= 3");
  }
  return {x_min, N, -x_min / (N - 1)};
}

GridSpec default_grid(double field, int levels, int N) {
  require(field, levels);
  const double s = std::cbrt(field);
  const double e_max = -airy_root(AiryZeroKind::ai, levels) * s * s;
  return GridSpec::make(-(std::max(e_max, 0.0) / field + 15.0 / s), N);
}

std::vector<double> fd_energies(Boundary bc, double field, int levels,
                                const GridSpec& grid) {
  require(field, levels);
  const Solution coarse = solve(bc, field, levels, grid.x_min, grid.N);
  const Solution fine = solve(bc, field, levels, grid.x_min, 2 * grid.N - 1);
  std::vector<double> out(levels);
  for (int l = 0; l < levels; ++l) {
    out[l] = (4.0 * fine.energies[l] - coarse.energies[l]) / 3.0;
  }
  return out;
}

double fd_moment(Boundary bc, double field, int n, int power,
                 const GridSpec& grid) {
  require(field, n + 1);
  if (power < 0) throw DomainError("fd_moment: power must be >= 0");
  const Solution coarse = solve(bc, field, n + 1, grid.x_min, grid.N);
  const Solution fine = solve(bc, field, n + 1, grid.x_min, 2 * grid.N - 1);
  return (4.0 * moment(fine, n, power) - moment(coarse, n, power)) / 3.0;
}

}  // namespace robinwall
