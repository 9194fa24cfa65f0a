#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "robinwall/errors.hpp"
#include "robinwall/quadrature.hpp"
#include "robinwall/spectrum.hpp"
#include "robinwall/states.hpp"

using namespace robinwall;

TEST_CASE("integrate basics") {
  const ToleranceConfig cfg;
  CHECK(integrate([](double x) { return x; }, 0.0, 1.0, cfg).value ==
        doctest::Approx(0.5).epsilon(1e-14));
  const auto r = integrate([](double x) { return 2.0 * std::exp(2.0 * x); },
                           -INFINITY, 0.0, cfg);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.error <= std::max(cfg.abs_tol, cfg.rel_tol));
  CHECK(integrate([](double x) { return x; }, 1.0, 0.0, cfg).value ==
        doctest::Approx(-0.5));
  const auto both = integrate([](double x) { return std::exp(-x * x); },
                              -INFINITY, INFINITY, cfg);
  CHECK(both.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("integrate reports non-convergence with its best estimate") {
  ToleranceConfig cfg;
  cfg.max_subdivisions = 32;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-15;
  try {
    integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, cfg);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.estimate()));
    CHECK(e.error() > 0.0);
  }
}

TEST_CASE("Dirichlet ground state is normalized") {
  const StateFunctions sf = build_state(energy(Boundary::dirichlet, 0, 1.0));
  ToleranceConfig tight;
  tight.abs_tol = 1e-13;
  tight.rel_tol = 1e-13;
  const auto r = integrate([&](double x) { return sf.rho(x); }, sf.x_cut(), 0.0, tight);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fourier_half_line of the field-free Robin state") {
  const ToleranceConfig cfg;
  const auto psi = [](double x) { return std::sqrt(2.0) * std::exp(x); };
  const double x_cut = std::log(1e-17);
  CHECK(std::norm(fourier_half_line(psi, 0.0, x_cut, cfg)) ==
        doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-12));
  CHECK(std::norm(fourier_half_line(psi, 1.0, x_cut, cfg)) ==
        doctest::Approx(0.5 / std::numbers::pi).epsilon(1e-12));
  for (double k = -50.0; k <= 50.0; k += 2.5) {
    const std::complex<double> exact =
        1.0 / std::sqrt(std::numbers::pi) / std::complex<double>(1.0, -k);
    CHECK(std::abs(fourier_half_line(psi, k, x_cut, cfg) - exact) < 1e-10);
  }
  CHECK_THROWS_AS(fourier_half_line(psi, 1.0, 0.5, cfg), DomainError);
}

TEST_CASE("momentum tail closed forms") {
  CHECK(momentum_tail_moment(std::sqrt(2.0), 0, 200.0) ==
        doctest::Approx(2.0 / (200.0 * std::numbers::pi)).epsilon(1e-14));
  CHECK(momentum_tail_moment(0.0, 0, 100.0) == 0.0);
  CHECK_THROWS_AS(momentum_tail_moment(std::sqrt(2.0), 0, 100.0), DomainError);
  CHECK_THROWS_AS(momentum_tail_moment(std::sqrt(2.0), 1, 300.0), DomainError);
  CHECK(momentum_tail_moment(std::sqrt(2.0), 0, 100.0,
                             ToleranceConfig{.k_tail_switch = 100.0}) ==
        doctest::Approx(2.0 / (100.0 * std::numbers::pi)));
}

TEST_CASE("entropy tail matches direct quadrature out to 10 K") {
  // gamma = 1/(pi (1 + k^2)) for psi = sqrt(2) e^x; expansion coefficients
  // c_p = (-1)^p / pi.
  MomentumTail tail;
  for (int p = 0; p < 12; ++p) tail.coefficients.push_back((p % 2 ? -1.0 : 1.0) / std::numbers::pi);
  const double K = 200.0;
  ToleranceConfig cfg;
  cfg.abs_tol = 1e-14;
  cfg.rel_tol = 1e-13;
  const auto gamma = [](double k) { return 1.0 / (std::numbers::pi * (1.0 + k * k)); };
  const double direct =
      2.0 * integrate([&](double k) { const double g = gamma(k); return -g * std::log(g); },
                      K, 10.0 * K, cfg).value;
  const TailMoments t200 = momentum_tail_moments(tail, K);
  const TailMoments t2000 = momentum_tail_moments(tail, 10.0 * K);
  CHECK(std::abs((t200.entropy - t2000.entropy) - direct) < 1e-8);
  CHECK(t200.probability ==
        doctest::Approx(2.0 / std::numbers::pi * std::atan(1.0 / K)).epsilon(1e-13));
}

TEST_CASE("tolerance validation") {
  ToleranceConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.abs_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.max_subdivisions = 8;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.x_cut_threshold = 1e-10;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("halving tolerances stays inside the reported error") {
  const StateFunctions sf = build_state(energy(Boundary::robin_plus, 1, 2.0));
  ToleranceConfig loose;
  loose.abs_tol = 1e-7;
  loose.rel_tol = 1e-7;
  ToleranceConfig half = loose;
  half.abs_tol /= 2.0;
  half.rel_tol /= 2.0;
  const PositionIntegrals a = sf.position_integrals(loose);
  const PositionIntegrals b = sf.position_integrals(half);
  CHECK(std::abs(a.entropy - b.entropy) <= a.error[1] + 1e-15);
  CHECK(std::abs(a.onicescu - b.onicescu) <= a.error[3] + 1e-15);
  const MomentumIntegrals ma = sf.momentum_integrals(loose);
  const MomentumIntegrals mb = sf.momentum_integrals(half);
  CHECK(std::abs(ma.entropy - mb.entropy) <= ma.error[1] + 1e-12);
}
