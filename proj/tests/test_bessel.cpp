#include <doctest.h>

#include <cmath>

#include "core/bessel.hpp"
#include "support/oracles.hpp"

using spinpair::bessel_j0;

TEST_SUITE("bessel") {

TEST_CASE("matches the integral definition across both branches") {
    // the implementation switches algorithms at |x| = 8; sample densely
    // through the seam and well beyond it
    double worst = 0.0;
    for (double x = 0.0; x <= 60.0; x += 0.37) {
        const double ref = testsup::trapezoid_j0(x);
        worst = std::max(worst, std::abs(bessel_j0(x) - ref));
    }
    CHECK(worst <= 5e-13);
}

TEST_CASE("known values") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j0(1.0) == doctest::Approx(0.76519768655796655).epsilon(1e-14));
    CHECK(bessel_j0(5.0) == doctest::Approx(-0.17759677131433830).epsilon(1e-13));
}

TEST_CASE("first zero sits at the classical location") {
    const double root = testsup::bisect([](double x) { return bessel_j0(x); }, 2.0, 3.0, 1e-14);
    CHECK(root == doctest::Approx(2.4048255576957728).epsilon(1e-12));
}

TEST_CASE("even in its argument and bounded by one") {
    for (double x = 0.1; x < 40.0; x += 1.7) {
        CHECK(bessel_j0(-x) == bessel_j0(x));
        CHECK(std::abs(bessel_j0(x)) <= 1.0);
    }
}

TEST_CASE("continuous across the algorithm seam") {
    const double below = bessel_j0(std::nextafter(8.0, 0.0));
    const double at = bessel_j0(8.0);
    CHECK(std::abs(below - at) <= 1e-12);
}

} // TEST_SUITE
