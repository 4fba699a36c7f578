#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include "holecorr/coupling.hpp"

using namespace holecorr;

TEST_CASE("frozen values") {
    CHECK(p_exact(0, 0) == RingT(rat(1, 3)));
    CHECK(p_exact(-1, -1) == RingT::t_power(1, rat(-1, 2)));  // -sqrt(3)/(2 pi)
    // recurrence away from the origin
    CHECK((p_exact(5, 7) + p_exact(4, 7) + p_exact(5, 6)).is_zero());
}

TEST_CASE("recurrence and symmetries on the grid") {
    for (long x = -20; x <= 20; ++x)
        for (long y = -20; y <= 20; ++y) {
            RingT sum = p_exact(x, y) + p_exact(x - 1, y) + p_exact(x, y - 1);
            if (x == 0 && y == 0) CHECK(sum == RingT(rat(1)));
            else CHECK(sum.is_zero());
            CHECK(p_exact(x, y) == p_exact(y, x));
            CHECK(p_exact(x, y) == p_exact(-x - y - 1, x));
            CHECK(p_exact(x, y).degree() <= 1);
        }
}

TEST_CASE("numeric quadrature matches exact values") {
    CHECK(std::abs(p_numeric(0, 0, 512) - 1.0 / 3) < 1e-6);
    CHECK(std::abs(p_numeric(-1, -1, 512) + std::sqrt(3.0) / (2 * M_PI)) < 1e-6);
    // swap symmetry is exact under the internal reduction
    CHECK(p_numeric(3, -9, 128) == doctest::Approx(p_numeric(-9, 3, 128)).epsilon(1e-14));
    CHECK_THROWS(p_numeric(0, 0, 32));
}

TEST_CASE("quadrature error shrinks with the grid") {
    for (long x = -4; x <= 4; x += 2)
        for (long y = -4; y <= 4; y += 3) {
            double exact = p_exact(x, y).eval_double();
            double coarse = std::abs(p_numeric(x, y, 64) - exact);
            double fine = std::abs(p_numeric(x, y, 128) - exact);
            CHECK(fine <= coarse / 2 + 1e-12);
            CHECK(std::abs(p_numeric(x, y, 2048) - exact) < 1e-9);
        }
}

TEST_CASE("large arguments stay exact") {
    // the recurrence must hold bit-exactly even with huge binomials inside
    long x = -600, y = 7;
    RingT sum = p_exact(x, y) + p_exact(x - 1, y) + p_exact(x, y - 1);
    CHECK(sum.is_zero());
    CHECK(p_exact(x, y).degree() <= 1);
}
