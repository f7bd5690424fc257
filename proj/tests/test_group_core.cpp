#include <doctest.h>

#include <cmath>

#include "jacobi/errors.hpp"
#include "jacobi/group_core.hpp"
#include "test_support.hpp"

using namespace jacobi;

namespace {

GroupElement random_element(test::Rng& rng) {
    GroupElement g;
    g.lambda = rng.uniform(-1.0, 1.0);
    g.mu_H = rng.uniform(-1.0, 1.0);
    g.kappa = rng.uniform(-1.0, 1.0);
    // K * upper-triangular with unit determinant.
    const double th = rng.uniform(-3.0, 3.0);
    const double eu = std::exp(rng.uniform(-0.4, 0.4));
    const double x = rng.uniform(-1.0, 1.0);
    const Mat2 rot{std::cos(th), std::sin(th), -std::sin(th), std::cos(th)};
    const Mat2 tri{eu, x, 0.0, 1.0 / eu};
    g.M = {rot.a * tri.a + rot.b * tri.c, rot.a * tri.b + rot.b * tri.d,
           rot.c * tri.a + rot.d * tri.c, rot.c * tri.b + rot.d * tri.d};
    return g;
}

PointCH random_point(test::Rng& rng) {
    return {cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
            cplx(rng.uniform(-1.0, 1.0), rng.uniform(0.3, 2.0))};
}

} // namespace

TEST_SUITE("group_core") {
    TEST_CASE("embedding of the identity and of central elements") {
        CHECK(max_abs_diff(embed(GroupElement{}), Mat4::identity()) == 0.0);

        GroupElement central;
        central.kappa = 2.75;
        Mat4 want = Mat4::identity();
        want(1, 3) = 2.75;
        CHECK(max_abs_diff(embed(central), want) == 0.0);
    }

    TEST_CASE("embedding rejects det != 1") {
        GroupElement g;
        g.M = {2.0, 0.0, 0.0, 1.0};
        CHECK_THROWS_AS(embed(g), Error);
    }

    TEST_CASE("embedding layout matches the defining matrix") {
        GroupElement g;
        g.lambda = 0.3;
        g.mu_H = -0.7;
        g.kappa = 1.1;
        g.M = {2.0, 1.0, 1.0, 1.0};
        const Mat4 e = embed(g);
        CHECK(e(0, 0) == 2.0);
        CHECK(e(0, 2) == 1.0);
        CHECK(e(0, 3) == 2.0 * -0.7 - 1.0 * 0.3);
        CHECK(e(1, 0) == 0.3);
        CHECK(e(1, 1) == 1.0);
        CHECK(e(1, 2) == -0.7);
        CHECK(e(1, 3) == 1.1);
        CHECK(e(2, 0) == 1.0);
        CHECK(e(2, 2) == 1.0);
        CHECK(e(2, 3) == 1.0 * -0.7 - 1.0 * 0.3);
        CHECK(e(3, 3) == 1.0);
        CHECK(e(0, 1) == 0.0);
        CHECK(e(3, 0) == 0.0);
    }

    TEST_CASE("embedding is a homomorphism over random pairs") {
        test::Rng rng(17);
        for (int trial = 0; trial < 100; ++trial) {
            const GroupElement g1 = random_element(rng);
            const GroupElement g2 = random_element(rng);
            const Mat4 lhs = embed(g1) * embed(g2);
            const Mat4 rhs = embed(compose(g1, g2));
            CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
        }
    }

    TEST_CASE("algebra basis matrices") {
        const auto basis = algebra_basis();
        const Mat4& h = basis[static_cast<int>(AlgebraGen::H)].matrix;
        CHECK(h(0, 0) == 1.0);
        CHECK(h(2, 2) == -1.0);
        const Mat4& r = basis[static_cast<int>(AlgebraGen::R)].matrix;
        CHECK(r(1, 3) == 1.0);

        for (const auto& elem : basis) {
            int nonzero = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (elem.matrix(i, j) != 0.0) {
                        ++nonzero;
                        CHECK(std::abs(elem.matrix(i, j)) == 1.0);
                    }
            CHECK(nonzero <= 2);
            CHECK(nonzero >= 1);
        }
    }

    TEST_CASE("algebra_element realizes linear combinations") {
        const AlgebraElement e = algebra_element({1.0, 0.0, 0.0, 0.0, 0.0, 2.0});
        // P + 2H
        CHECK(e.matrix(1, 0) == 1.0);
        CHECK(e.matrix(2, 3) == -1.0);
        CHECK(e.matrix(0, 0) == 2.0);
        CHECK(e.matrix(2, 2) == -2.0);
    }

    TEST_CASE("structure constants hold exactly") {
        const StructureReport report = check_structure_constants();
        CHECK(report.pairs_checked == 15);
        CHECK(report.max_deviation == 0.0);
    }

    TEST_CASE("named brackets") {
        const auto basis = algebra_basis();
        const auto mat = [&](AlgebraGen x) { return basis[static_cast<int>(x)].matrix; };
        CHECK(max_abs_diff(bracket(mat(AlgebraGen::P), mat(AlgebraGen::Q)),
                           2.0 * mat(AlgebraGen::R)) == 0.0);
        CHECK(max_abs(bracket(mat(AlgebraGen::F), mat(AlgebraGen::R))) == 0.0);
        CHECK(max_abs_diff(bracket(mat(AlgebraGen::H), mat(AlgebraGen::F)),
                           2.0 * mat(AlgebraGen::F)) == 0.0);
    }

    TEST_CASE("action of the identity leaves points fixed with factor one") {
        const PointCH p{cplx(0.4, -0.2), cplx(0.1, 1.3)};
        const auto r = jacobi_action(GroupElement{}, p, 0.8, 3.0);
        CHECK(std::abs(r.point.z - p.z) == 0.0);
        CHECK(std::abs(r.point.tau - p.tau) == 0.0);
        CHECK(std::abs(r.factor - 1.0) <= 1e-15);
    }

    TEST_CASE("heisenberg translations act affinely") {
        GroupElement g;
        g.lambda = 0.7;
        g.mu_H = -0.4;
        const PointCH p{cplx(0.2, 0.5), cplx(-0.3, 0.9)};
        const auto r = jacobi_action(g, p, 1.0, 2.0);
        CHECK(std::abs(r.point.z - (p.z + 0.7 * p.tau - 0.4)) <= 1e-15);
        CHECK(std::abs(r.point.tau - p.tau) == 0.0);
    }

    TEST_CASE("action preserves the upper half-plane") {
        test::Rng rng(23);
        for (int trial = 0; trial < 200; ++trial) {
            const auto r = jacobi_action(random_element(rng), random_point(rng), 0.5, 2.0);
            CHECK(r.point.tau.imag() > 0.0);
        }
    }

    TEST_CASE("action rejects points outside the half-plane") {
        CHECK_THROWS_AS(jacobi_action(GroupElement{}, PointCH{0.0, cplx(0.0, -1.0)}, 1.0, 2.0),
                        Error);
    }

    TEST_CASE("composed action and cocycle at integer weight") {
        test::Rng rng(29);
        const double m = 0.7;
        const double k = 3.0;
        for (int trial = 0; trial < 100; ++trial) {
            const GroupElement g1 = random_element(rng);
            const GroupElement g2 = random_element(rng);
            const GroupElement g12 = compose(g1, g2);
            const PointCH p = random_point(rng);

            const auto r2 = jacobi_action(g2, p, m, k);
            const auto r12 = jacobi_action(g12, p, m, k);
            const auto r1 = jacobi_action(g1, r2.point, m, k);

            CHECK(std::abs(r12.point.z - r1.point.z) <= 1e-12);
            CHECK(std::abs(r12.point.tau - r1.point.tau) <= 1e-12);
            CHECK(std::abs(r12.factor - r1.factor * r2.factor) <=
                  1e-10 * std::abs(r12.factor));
        }
    }

    TEST_CASE("modulus of the factor is multiplicative at non-integer weight") {
        // Principal-branch phases may differ at non-integer k; the modulus
        // must still compose.
        test::Rng rng(31);
        const double m = 0.3;
        const double k = 2.6;
        for (int trial = 0; trial < 100; ++trial) {
            const GroupElement g1 = random_element(rng);
            const GroupElement g2 = random_element(rng);
            const PointCH p = random_point(rng);
            const auto r2 = jacobi_action(g2, p, m, k);
            const auto r12 = jacobi_action(compose(g1, g2), p, m, k);
            const auto r1 = jacobi_action(g1, r2.point, m, k);
            CHECK(std::abs(std::abs(r12.factor) - std::abs(r1.factor * r2.factor)) <=
                  1e-10 * std::abs(r12.factor));
        }
    }
}
