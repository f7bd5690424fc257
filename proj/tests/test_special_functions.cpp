#include <doctest.h>

#include <cmath>

#include "jacobi/errors.hpp"
#include "jacobi/special_functions.hpp"

using namespace jacobi;

TEST_SUITE("special_functions") {
    TEST_CASE("pochhammer basics") {
        CHECK(pochhammer(3.7, 0) == 1.0);
        CHECK(pochhammer(3.7, 1) == 3.7);
        double fact = 1.0;
        for (int n = 1; n <= 10; ++n) {
            fact *= n;
            CHECK(pochhammer(1.0, n) == fact);
        }
        CHECK(pochhammer(-2.0, 4) == 0.0);  // hits the zero factor at j = 2
    }

    TEST_CASE("pochhammer recurrence is exact") {
        for (double x : {0.25, -1.3, 2.0, 7.5})
            for (int n = 0; n <= 20; ++n)
                CHECK(pochhammer(x, n + 1) == pochhammer(x, n) * (x + n));
    }

    TEST_CASE("laguerre low orders") {
        for (double x : {-2.0, 0.0, 0.7, 3.5}) {
            CHECK(laguerre(0, 4, x) == 1.0);
            CHECK(laguerre(1, 2, x) == doctest::Approx(3.0 - x).epsilon(1e-15));
        }
        CHECK(laguerre(2, 0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
    }

    TEST_CASE("laguerre three-term recurrence") {
        for (int s : {0, 1, 3}) {
            for (double x : {-10.0, -1.2, 0.3, 4.0, 10.0}) {
                for (int n = 1; n <= 29; ++n) {
                    const double lhs = (n + 1.0) * laguerre(n + 1, s, x);
                    const double rhs = (2.0 * n + s + 1.0 - x) * laguerre(n, s, x) -
                                       (n + s) * laguerre(n - 1, s, x);
                    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
                    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
                }
            }
        }
    }

    TEST_CASE("terminating 2F1") {
        CHECK(hyp2f1_terminating(0, 5.0, 3.0, 0.8) == 1.0);
        CHECK(hyp2f1_terminating(1, 2.5, 4.0, 0.3) ==
              doctest::Approx(1.0 - 2.5 * 0.3 / 4.0).epsilon(1e-15));
        CHECK(hyp2f1_terminating(2, 3.0, 2.0, 1.0) == doctest::Approx(0.0));
        for (int n : {0, 1, 4, 9}) CHECK(hyp2f1_terminating(n, 1.7, 2.4, 0.0) == 1.0);
    }

    TEST_CASE("2F1 rejects a non-positive integer c reached before termination") {
        CHECK_THROWS_AS(hyp2f1_terminating(3, 1.0, -1.0, 0.5), Error);
        CHECK_THROWS_AS(hyp2f1_terminating(2, 1.0, 0.0, 0.5), Error);
        CHECK_NOTHROW(hyp2f1_terminating(2, 1.0, -0.5, 0.5));
    }

    TEST_CASE("lambda coefficient") {
        CHECK(lambda_coeff(3.0, 0) == 1.0);
        const HalfWeight hw(3.0);
        CHECK(lambda_coeff(3.0, 1) ==
              doctest::Approx(1.0 / std::sqrt(2.0 * hw.h)).epsilon(1e-15));
        CHECK(lambda_coeff(2.5, 2) == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-15));
        CHECK_THROWS_AS(lambda_coeff(0.5, 1), Error);
    }

    TEST_CASE("half weight bookkeeping") {
        CHECK(HalfWeight(0.5).h == 0.0);
        CHECK(HalfWeight(2.5).h == 1.0);
        CHECK((HalfWeight(1.7).k > 0.5) == (HalfWeight(1.7).h > 0.0));
    }
}
