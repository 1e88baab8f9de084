#include <catch2/catch_amalgamated.hpp>

#include "matjul/log_complex.hpp"
#include "matjul/scalar_dynamics.hpp"

using namespace matjul;
using Catch::Approx;

namespace {
const Polynomial z2({{0, 0}, {0, 0}, {1, 0}});
const Polynomial z2m1({{-1, 0}, {0, 0}, {1, 0}});
const Polynomial z2m2({{-2, 0}, {0, 0}, {1, 0}});
const Polynomial parabolic({{0, 0}, {1, 0}, {1, 0}});  // z + z^2

// Closed form for the Chebyshev-like map z^2 - 2: the escaping coordinate is
// phi(z) = (z + sqrt(z^2 - 4)) / 2 and G = log|phi|.
cdouble cheb_phi(cdouble z) { return 0.5 * (z + std::sqrt(z * z - 4.0)); }
}  // namespace

TEST_CASE("orbit_classify fixtures") {
  SECTION("contracting start stays bounded") {
    const auto st = orbit_classify(z2, {0.5, 0}, 100, 3.0);
    CHECK_FALSE(st.escaped);
  }
  SECTION("doubling modulus escapes at step one") {
    const auto st = orbit_classify(z2, {2, 0}, 100, 3.0);
    REQUIRE(st.escaped);
    CHECK(st.steps == 1);
    CHECK(std::abs(st.last - cdouble{4, 0}) < 1e-15);
  }
  SECTION("superattracting two-cycle never escapes") {
    const auto st = orbit_classify(z2m1, {0, 0}, 1000, z2m1.escape_radius());
    CHECK_FALSE(st.escaped);
    // exact orbit 0 -> -1 -> 0: last point after even budget is 0
    CHECK(std::abs(st.last) < 1e-15);
  }
  SECTION("radius below the escape radius is rejected") {
    CHECK_THROWS_AS(orbit_classify(z2, {0, 0}, 10, 1.5), std::invalid_argument);
  }
}

TEST_CASE("green_scalar closed forms") {
  SECTION("z^2 beyond the disk: G = log|z|") {
    const auto g = green_scalar(z2, {2, 0}, 1000);
    REQUIRE(g.escaped);
    CHECK(std::abs(g.value - std::log(2.0)) <= 1e-9);
    CHECK(g.error_bound <= 1e-9);
  }
  SECTION("interior point is censored to zero") {
    const auto g = green_scalar(z2, {0.5, 0}, 1000);
    CHECK_FALSE(g.escaped);
    CHECK(g.value == 0.0);
  }
  SECTION("Chebyshev-like closed form at z = 3") {
    const auto g = green_scalar(z2m2, {3, 0}, 1000);
    REQUIRE(g.escaped);
    const double expected = std::log(std::abs(cheb_phi({3, 0})));  // log((3+sqrt 5)/2)
    CHECK(expected == Approx(0.9624236501192069).epsilon(1e-12));
    CHECK(std::abs(g.value - expected) <= 1e-9 + g.error_bound);
  }
  SECTION("value and error bound scale together") {
    const auto g = green_scalar(z2m1, {1.8, 0.3}, 1000);
    REQUIRE(g.escaped);
    CHECK(g.error_bound < 1e-10);
  }
}

TEST_CASE("iterate_with_derivative chain rule") {
  SECTION("one step of z^2") {
    const cdouble z0{1.3, -0.4};
    const auto [w, dw] = iterate_with_derivative(z2, z0, 1);
    CHECK(std::abs(w - z0 * z0) < 1e-15);
    CHECK(std::abs(dw - 2.0 * z0) < 1e-15);
  }
  SECTION("parabolic fixed point keeps derivative one") {
    const auto [w, dw] = iterate_with_derivative(parabolic, {0, 0}, 7);
    CHECK(w == cdouble{0, 0});
    CHECK(dw == cdouble{1, 0});
  }
  SECTION("superattracting two-cycle kills the derivative") {
    // orbit 0 -> -1 -> 0 -> -1 -> 0, chain rule hits p'(0) = 0
    const auto [w, dw] = iterate_with_derivative(z2m1, {0, 0}, 4);
    CHECK(std::abs(w) < 1e-15);
    CHECK(std::abs(dw) < 1e-15);
  }
}

TEST_CASE("derivative growth approaches the Green value") {
  // closed form for z^2: d^{-n} log|(p^n)'(z)| = log|z| + 2^{-n}(n log 2 - log|z|)
  SECTION("z = 2, n = 20 against the closed form") {
    const double n = 20;
    const double expected =
        std::log(2.0) + std::pow(2.0, -n) * (n * std::log(2.0) - std::log(2.0));
    CHECK(derivative_growth(z2, {2, 0}, 20) == Approx(expected).margin(1e-10));
    CHECK(std::abs(derivative_growth(z2, {2, 0}, 20) - std::log(2.0)) < 2e-5);
  }
  SECTION("z = 3, n = 20 against the closed form") {
    const double n = 20;
    const double expected =
        std::log(3.0) + std::pow(2.0, -n) * (n * std::log(2.0) - std::log(3.0));
    CHECK(derivative_growth(z2, {3, 0}, 20) == Approx(expected).margin(1e-10));
  }
  SECTION("Chebyshev-like at n = 25 meets the Green oracle") {
    const double g = green_scalar(z2m2, {3, 0}, 1000).value;
    CHECK(std::abs(derivative_growth(z2m2, {3, 0}, 25) - g) <= 1e-4);
  }
  SECTION("non-escaping input is rejected") {
    CHECK_THROWS_AS(derivative_growth(z2, {0.5, 0}, 10), std::domain_error);
  }
  SECTION("non-monic map: both quantities converge to log|2z| = log 10") {
    const Polynomial two_z2({{0, 0}, {0, 0}, {2, 0}});
    CHECK(std::abs(derivative_growth(two_z2, {5, 0}, 25) - std::log(10.0)) < 1e-5);
    // the Green estimator stops at its threshold; the leading-coefficient
    // offset stays inside the certified error bound
    const auto g = green_scalar(two_z2, {5, 0}, 1000);
    CHECK(std::abs(g.value - std::log(10.0)) <= g.error_bound);
    CHECK(g.error_bound < 0.05);
  }
}

TEST_CASE("log-scale iteration tracks huge orbits exactly") {
  // z^2 from z = 2: log|p^n(z)| = 2^n log 2, far past double range
  LogComplex w = LogComplex::from({2, 0});
  for (int k = 0; k < 40; ++k) w = eval_log(z2, w);
  CHECK(w.log_mag == Approx(std::pow(2.0, 40) * std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(w.unit - cdouble{1, 0}) < 1e-9);
}

TEST_CASE("attracting cycle detection") {
  auto orbit_of = [](const Polynomial& p, cdouble z, int n) {
    std::vector<cdouble> orbit{z};
    for (int k = 0; k < n; ++k) orbit.push_back(p(orbit.back()));
    return orbit;
  };
  SECTION("superattracting fixed point") {
    const auto det = detect_attracting_cycle(z2, orbit_of(z2, {0.3, 0}, 200), 64, 1e-9, 1e-6);
    REQUIRE(det.found);
    CHECK(det.period == 1);
    CHECK(det.multiplier_modulus < 1e-6);
  }
  SECTION("superattracting two-cycle") {
    const auto det = detect_attracting_cycle(z2m1, orbit_of(z2m1, {0.1, 0.1}, 300), 64, 1e-9, 1e-6);
    REQUIRE(det.found);
    CHECK(det.period == 2);
  }
  SECTION("repelling fixed point is not certified") {
    const auto det = detect_attracting_cycle(z2, orbit_of(z2, {1.0, 0}, 200), 64, 1e-9, 1e-6);
    CHECK_FALSE(det.found);
  }
}
