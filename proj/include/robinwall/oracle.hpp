#pragma once

#include <vector>

#include "robinwall/spectrum.hpp"

namespace robinwall {

/// Uniform grid x_i = -i h, i = 0..N-1, on [x_min, 0].
struct GridSpec {
  double x_min = 0.0;
  int N = 0;
  double h = 0.0;

  static GridSpec make(double x_min, int N);
};

/// x_min = -(E_max/field + 15 field^{-1/3}) with E_max the Dirichlet level
/// `levels - 1`: classical turning point plus fifteen Airy widths.
GridSpec default_grid(double field, int levels, int N = 4000);

/// Lowest `levels` eigenvalues of the three-point discretization of
/// -d^2/dx^2 - field x, Richardson-extrapolated from h and h/2. Robin and
/// Neumann walls enter through a ghost point, keeping the matrix symmetric.
/// Throws DomainError (with a deeper x_min in the message) when an
/// eigenvector has not decayed at the far end.
std::vector<double> fd_energies(Boundary bc, double field, int levels,
                                const GridSpec& grid);

/// <x^power> of level n by the trapezoid rule on the normalized
/// eigenvector, Richardson-extrapolated like the energies.
double fd_moment(Boundary bc, double field, int n, int power,
                 const GridSpec& grid);

}  // namespace robinwall
