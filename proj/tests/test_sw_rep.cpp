#include <doctest.h>

#include <cmath>

#include "jacobi/errors.hpp"
#include "jacobi/sw_rep.hpp"
#include "test_support.hpp"

using namespace jacobi;

TEST_SUITE("sw_rep") {
    TEST_CASE("index data") {
        const SWIndex idx(1.0 / (2.0 * M_PI));
        CHECK(idx.mu == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(idx.sigma == 1);
        CHECK(idx.hbar == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(SWIndex(-0.5).sigma == -1);
        CHECK_THROWS_AS(SWIndex(0.0), Error);
    }

    TEST_CASE("ladder matrices") {
        auto [a, a_dag] = build_ladder(6);
        const StateVector vac = basis_state(a.basis, 0);
        CHECK(norm2(apply(a, vac).coeffs) == 0.0);
        CHECK(a.mat(0, 1).real() == 1.0);
        CHECK(a.mat(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        const TruncatedOperator c = commutator(a, a_dag);
        for (int n = 0; n <= 5; ++n) CHECK(std::abs(c.mat(n, n) - 1.0) <= 1e-14);
    }

    TEST_CASE("generator bundle structure") {
        const SWGenerators g = build_sw_generators(16, SWIndex(1.0 / (2.0 * M_PI)));
        for (int n = 0; n <= 16; ++n)
            CHECK(g.K0.mat(n, n).real() == doctest::Approx(0.5 * n + 0.25).epsilon(1e-15));

        // W operators vanish identically for this family.
        CHECK(g.W0.mat.max_abs() == 0.0);
        CHECK(g.W_plus.mat.max_abs() == 0.0);
        CHECK(g.W_minus.mat.max_abs() == 0.0);

        // K- = a^2/2 and the su(1,1) relation on the interior block.
        CHECK(max_abs_diff((0.5 * (g.a * g.a)).mat, g.K_minus.mat) == 0.0);
        CHECK(max_abs_diff_interior(commutator(g.K_minus, g.K_plus), 2.0 * g.K0, 14) <= 1e-12);

        // Quadratures: hermitian, and [q, p] = i hbar on the interior.
        CHECK(max_abs_diff(g.q.mat, g.q.mat.adjoint()) == 0.0);
        CHECK(max_abs_diff(g.p.mat, g.p.mat.adjoint()) == 0.0);
        const TruncatedOperator qp = commutator(g.q, g.p);
        CHECK(max_abs_diff_interior(qp, cplx(0.0, g.index.hbar) * identity_op(g.basis), 14) <=
              1e-15);

        CHECK_THROWS_AS(build_sw_generators(1, SWIndex(1.0)), Error);
    }

    TEST_CASE("f polynomials at low order") {
        CHECK(f_poly(0).coeff(0, 0) == cplx(1.0));
        CHECK(f_poly(1).coeff(1, 0) == cplx(1.0));
        const BivarPoly f2 = f_poly(2);
        CHECK(std::abs(f2.coeff(2, 0) - 1.0 / std::sqrt(2.0)) <= 1e-15);
        CHECK(std::abs(f2.coeff(0, 1) - 1.0 / std::sqrt(2.0)) <= 1e-15);
        CHECK(f2.terms().size() == 2);

        // f_n(alpha, 0) = alpha^n / sqrt(n!).
        double fact = 1.0;
        for (int n = 0; n <= 12; ++n) {
            if (n > 1) fact *= n;
            CHECK(std::abs(f_poly(n).coeff(n, 0) - 1.0 / std::sqrt(fact)) <=
                  1e-15 / std::sqrt(fact) + 1e-18);
        }
    }

    TEST_CASE("generating function residual") {
        CHECK(generating_residual(0.0, cplx(0.7, 0.1), cplx(0.2, 0.0), 5) == 0.0);
        CHECK(generating_residual(cplx(0.9, 0.3), 0.0, 0.0, 1) == 0.0);
        test::Rng rng(7);
        for (int trial = 0; trial < 25; ++trial) {
            const cplx z = rng.on_disk(0.0, 1.0);
            const cplx alpha = rng.on_disk(0.0, 1.0);
            const cplx w = rng.on_disk(0.0, 0.5);
            CHECK(generating_residual(z, alpha, w, 40) < 1e-10);
        }
    }

    TEST_CASE("heat equation: exact coefficient arithmetic") {
        for (int n = 0; n <= 20; ++n) CHECK(heat_pde_residual(f_poly_exact(n)).is_zero());
    }

    TEST_CASE("heat equation: double precision") {
        CHECK(heat_pde_residual(f_poly(0)).is_zero());
        CHECK(heat_pde_residual(f_poly(2)).max_abs_coeff() <= 1e-15);
        for (int n = 0; n <= 20; ++n)
            CHECK(heat_pde_residual(f_poly(n)).max_abs_coeff() <= 1e-12);
    }

    TEST_CASE("heat equation rejects the wrong variable tag") {
        BivarPoly p(VarPair::ZZeta);
        p.add_term(2, 0, 1.0);
        CHECK_THROWS_AS(heat_pde_residual(p), Error);
    }

    TEST_CASE("pi0 ladder actions on low polynomials") {
        const BivarPoly f0 = f_poly(0);
        const BivarPoly f1 = f_poly(1);

        CHECK(max_abs_coeff_diff(pi0_apply(GenName::A, f1), f0) == 0.0);
        CHECK(max_abs_coeff_diff(pi0_apply(GenName::K0, f0), 0.25 * f0) == 0.0);
        CHECK(max_abs_coeff_diff(pi0_apply(GenName::ADag, f0), f1) == 0.0);

        // K+ f0 = alpha^2/2 + w/2 = f_2 / sqrt(2).
        const BivarPoly k_plus_f0 = pi0_apply(GenName::KPlus, f0);
        CHECK(max_abs_coeff_diff(k_plus_f0, (1.0 / std::sqrt(2.0)) * f_poly(2)) <= 1e-16);

        BivarPoly wrong(VarPair::ZZeta);
        wrong.add_term(0, 0, 1.0);
        CHECK_THROWS_AS(pi0_apply(GenName::A, wrong), Error);
    }

    TEST_CASE("expansion in the f basis recovers random combinations") {
        test::Rng rng(13);
        BivarPoly p(VarPair::AlphaW);
        std::vector<cplx> want(11);
        for (int n = 0; n <= 10; ++n) {
            want[n] = rng.on_disk(0.0, 2.0);
            p += want[n] * f_poly(n);
        }
        const FExpansion e = expand_in_f_basis(p, 10);
        CHECK(e.remainder <= 1e-13);
        for (int n = 0; n <= 10; ++n) CHECK(std::abs(e.coeffs[n] - want[n]) <= 1e-12);
    }

    TEST_CASE("intertwining with the Fock matrices") {
        CHECK(intertwine_check_sw(16) <= 1e-12);
    }
}
