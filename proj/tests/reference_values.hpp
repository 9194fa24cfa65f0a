#pragma once

#include <array>

// Reference CGL_x, CGL_k, CGL_x CGL_k of the Dirichlet and Neumann levels
// n = 0..5.
inline constexpr std::array<std::array<double, 3>, 6> kTableDirichlet = {{
    {1.1542, 1.2350, 1.4255},
    {1.1610, 1.1650, 1.3527},
    {1.1712, 1.1346, 1.3289},
    {1.1808, 1.1167, 1.3186},
    {1.1895, 1.1045, 1.3138},
    {1.1974, 1.0956, 1.3118},
}};

inline constexpr std::array<std::array<double, 3>, 6> kTableNeumann = {{
    {1.1933, 1.7010, 2.0299},
    {1.1599, 1.3488, 1.5645},
    {1.1673, 1.2479, 1.4567},
    {1.1767, 1.2005, 1.4126},
    {1.1856, 1.1719, 1.3894},
    {1.1938, 1.1524, 1.3757},
}};
