#include <cmath>
#include <numbers>

#include "doctest.h"
#include "robinwall/errors.hpp"
#include "robinwall/infomeasures.hpp"
#include "robinwall/special_functions.hpp"

using namespace robinwall;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

InfoRecord info(Boundary bc, int n, double f) {
  return info_record(build_state(energy(bc, n, f)));
}
}  // namespace

TEST_CASE("field-free robin- measures") {
  const InfoRecord r = info(Boundary::robin_minus, 0, 0.0);
  CHECK(r.S_x == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-9));
  CHECK(r.S_k == doctest::Approx(2.0 * std::log(2.0) + std::log(kPi)).epsilon(1e-9));
  CHECK(r.I_x == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(r.I_k == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.O_x == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.O_k == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-9));
  CHECK(r.CGL_x == doctest::Approx(kE / 2.0).epsilon(1e-9));
  CHECK(r.CGL_k == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.CGL_product == doctest::Approx(kE).epsilon(1e-9));
}

TEST_CASE("robin- ground measures in a weak field") {
  // First-order perturbation theory around sqrt(2) e^x.
  const double f = 0.05;
  const InfoRecord r = info(Boundary::robin_minus, 0, f);
  CHECK(std::abs(r.S_x - (1.0 - std::log(2.0) - f / 2.0)) < 2e-3);
  CHECK(std::abs(r.S_k - (std::log(4.0 * kPi) + 3.0 * f / 8.0)) < 2e-3);
  CHECK(std::abs(r.O_x - (1.0 + 3.0 * f / 8.0)) < 2e-3);
  CHECK(std::abs(r.O_k - (1.0 - f / 2.0) / (2.0 * kPi)) < 2e-3);
  CHECK(std::abs(r.onicescu_product - (1.0 - f / 8.0) / (2.0 * kPi)) < 2e-3);

  const double g = 0.01;
  const InfoRecord w = info(Boundary::robin_minus, 0, g);
  CHECK(std::abs(w.I_x - (4.0 + 2.0 * g - 1.5 * g * g)) < 1e-5);
  CHECK(std::abs(w.I_k - (0.5 - 11.0 * g / 16.0)) < 2e-4);
  CHECK(std::abs(w.fisher_product - (2.0 - 7.0 * g / 4.0)) < 2e-3);
}

TEST_CASE("robin- ground Onicescu product at field 40") {
  CHECK(std::abs(info(Boundary::robin_minus, 0, 40.0).onicescu_product - 0.14395) < 1e-3);
  CHECK(std::abs(info(Boundary::neumann, 0, 1.0).onicescu_product - 0.14081) < 1e-3);
}

TEST_CASE("Dirichlet position entropy shifts by ln 8 / 3") {
  for (int n = 0; n < 3; ++n) {
    const double a = info(Boundary::dirichlet, n, 0.7).S_x;
    const double b = info(Boundary::dirichlet, n, 5.6).S_x;
    CHECK(std::abs(b - a + std::log(8.0) / 3.0) < 1e-6);
  }
}

TEST_CASE("position Fisher information") {
  const BoundState d = energy(Boundary::dirichlet, 0, 1.0);
  CHECK(fisher_position_analytic(d) == doctest::Approx(3.11748).epsilon(1e-5));
  for (Boundary bc : {Boundary::robin_minus, Boundary::robin_plus, Boundary::neumann}) {
    for (int n = 0; n < 3; ++n) {
      const StateFunctions sf = build_state(energy(bc, n, 2.0));
      const auto [ix, ik] = fisher(sf, sf.config());
      CHECK(ix == doctest::Approx(sf.position_integrals().fisher).epsilon(1e-6));
      CHECK(ik > 0.0);
    }
  }
}

TEST_CASE("cgl from a record") {
  InfoRecord r;
  r.S_x = 0.3;
  r.S_k = 2.1;
  r.O_x = 1.2;
  r.O_k = 0.15;
  const Complexity c = cgl(r);
  CHECK(c.x == doctest::Approx(std::exp(0.3) * 1.2));
  CHECK(c.k == doctest::Approx(std::exp(2.1) * 0.15));
  CHECK(c.product == doctest::Approx(c.x * c.k));
}

TEST_CASE("Dirichlet and Neumann ground complexity") {
  const InfoRecord d = info(Boundary::dirichlet, 0, 1.0);
  CHECK(std::abs(d.CGL_x - 1.1542) < 5e-4);
  CHECK(std::abs(d.CGL_k - 1.2350) < 5e-4);
  CHECK(std::abs(d.CGL_product - 1.4255) < 5e-4);
  const InfoRecord n = info(Boundary::neumann, 0, 1.0);
  CHECK(std::abs(n.CGL_x - 1.1933) < 5e-4);
  CHECK(std::abs(n.CGL_k - 1.7010) < 5e-4);
  CHECK(std::abs(n.CGL_product - 2.0299) < 5e-4);
}

TEST_CASE("entropic uncertainty holds everywhere") {
  CHECK(entropic_bound() == doctest::Approx(1.0 + std::log(kPi)));
  for (Boundary bc : {Boundary::dirichlet, Boundary::neumann, Boundary::robin_minus,
                      Boundary::robin_plus}) {
    for (double f : {0.01, 0.3, 3.0, 80.0}) {
      for (int n : {0, 1, 4}) {
        const InfoRecord r = info(bc, n, f);
        CHECK(r.S_t >= entropic_bound());
        CHECK(r.S_t == doctest::Approx(r.S_x + r.S_k));
        CHECK(r.fisher_product > 0.0);
        CHECK(r.onicescu_product > 0.0);
      }
    }
  }
}

TEST_CASE("Dirichlet and Neumann products are field independent") {
  for (Boundary bc : {Boundary::dirichlet, Boundary::neumann}) {
    for (int n = 0; n <= 3; ++n) {
      const InfoRecord ref = info(bc, n, 1.0);
      for (double f : {0.1, 10.0}) {
        const InfoRecord r = info(bc, n, f);
        CHECK(std::abs(r.S_t - ref.S_t) < 5e-4);
        CHECK(std::abs(r.fisher_product - ref.fisher_product) < 5e-4);
        CHECK(std::abs(r.onicescu_product - ref.onicescu_product) < 5e-4);
        CHECK(std::abs(r.CGL_x - ref.CGL_x) < 5e-4);
        CHECK(std::abs(r.CGL_k - ref.CGL_k) < 5e-4);
        CHECK(r.I_x == doctest::Approx(4.0 / 3.0 * energy(bc, n, f).energy).epsilon(1e-9));
        CHECK(r.I_k * std::pow(f, 2.0 / 3.0) == doctest::Approx(ref.I_k).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("Onicescu ordering in n") {
  for (Boundary bc : {Boundary::dirichlet, Boundary::neumann}) {
    for (int n = 0; n < 4; ++n) {
      CHECK(info(bc, n, 1.0).O_x > info(bc, n + 1, 1.0).O_x);
    }
  }
  for (int n = 0; n < 4; ++n) {
    CHECK(info(Boundary::dirichlet, n, 1.0).O_k > info(Boundary::dirichlet, n + 1, 1.0).O_k);
  }
  const double k0 = info(Boundary::neumann, 0, 1.0).O_k;
  const double k1 = info(Boundary::neumann, 1, 1.0).O_k;
  const double k2 = info(Boundary::neumann, 2, 1.0).O_k;
  CHECK(k2 < k0);
  CHECK(k0 < k1);
}

TEST_CASE("Neumann complexity product exceeds the Dirichlet one") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(info(Boundary::neumann, n, 1.0).CGL_product >
          info(Boundary::dirichlet, n, 1.0).CGL_product);
  }
}

TEST_CASE("momentum Fisher coefficients") {
  CHECK(momentum_fisher_coefficient(Boundary::dirichlet, 0) ==
        doctest::Approx(1.55146197).epsilon(1e-7));
  CHECK(momentum_fisher_coefficient(Boundary::neumann, 0) ==
        doctest::Approx(0.66405335).epsilon(1e-7));
  CHECK(momentum_fisher_coefficient(Boundary::dirichlet, 3) ==
        doctest::Approx(info(Boundary::dirichlet, 3, 27.0).I_k * 9.0).epsilon(1e-7));
  CHECK_THROWS_AS(momentum_fisher_coefficient(Boundary::robin_minus, 0), DomainError);
}

TEST_CASE("flat-well approximation") {
  const FlatWell w = flat_well_approximation(1.0);
  CHECK(w.S_x == doctest::Approx(2.0 * std::log(2.0) - 1.0 + std::log(2.33811)).epsilon(1e-5));
  CHECK(std::abs(w.S_x - 1.23576) < 2e-4);
  for (double f : {0.01, 1.0, 300.0}) {
    CHECK(flat_well_approximation(f).S_t == doctest::Approx(2.212).epsilon(1e-3));
  }
  const double exact = info(Boundary::dirichlet, 0, 1.0).S_t;
  CHECK(std::abs(exact - 2.254) < 5e-3);
  CHECK(std::abs(exact - w.S_t - 0.042) < 3e-3);
}

TEST_CASE("entropy crossing") {
  const InfoRecord a0 = info(Boundary::robin_minus, 0, 0.5);
  const InfoRecord a1 = info(Boundary::robin_minus, 1, 0.5);
  CHECK(a0.S_t > a1.S_t);
  const InfoRecord b0 = info(Boundary::robin_minus, 0, 3.0);
  const InfoRecord b1 = info(Boundary::robin_minus, 1, 3.0);
  CHECK(b0.S_t < b1.S_t);
  CHECK(std::abs(entropy_crossing() - 1.45) <= 0.02);
}

TEST_CASE("Fisher product of the first field-induced level") {
  const FisherMaximum m = fisher_product_maximum(1);
  CHECK(std::abs(m.field - 0.022) <= 0.003);
  CHECK(std::abs(m.value - 5.756) <= 0.01);
  CHECK(m.bracket.first <= m.field);
  CHECK(m.field <= m.bracket.second);
  const FisherLimits lim = fisher_product_limits(1);
  CHECK(std::abs(lim.zero_field - 4.837) <= 0.01);
  CHECK(std::abs(lim.large_field - 3.472) <= 0.01);
  CHECK_THROWS_AS(fisher_product_maximum(0), DomainError);
}

TEST_CASE("polynomial limit") {
  CHECK(polynomial_limit({1.0, 2.0, 3.0}, {3.0, 5.0, 7.0}) == doctest::Approx(1.0));
  CHECK(polynomial_limit({0.5, 1.0, 2.0}, {1.25, 2.0, 5.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(polynomial_limit({1.0}, {1.0, 2.0}), DomainError);
}
