#include <doctest.h>

#include <cmath>

#include "jacobi/ds_rep.hpp"
#include "jacobi/errors.hpp"

using namespace jacobi;

TEST_SUITE("ds_rep") {
    TEST_CASE("weight validation") {
        CHECK_THROWS_AS(DSWeight(0.5), Error);
        CHECK_THROWS_AS(DSWeight(-1.0), Error);
        CHECK(DSWeight(0.50001).k > 0.5);
    }

    TEST_CASE("lowest weight relations") {
        const double k = 2.2;
        const DSGenerators g = build_ds_generators(DSWeight(k), 6);
        const int lw = g.basis.ds_index(0, 0);
        const StateVector e0 = basis_state(g.basis, lw);
        CHECK(norm2(apply(g.a, e0).coeffs) == 0.0);
        CHECK(norm2(apply(g.K_minus, e0).coeffs) == 0.0);
        const StateVector k0e0 = apply(g.K0, e0);
        CHECK(std::abs(2.0 * k0e0.coeffs[lw] - k) <= 1e-15);
    }

    TEST_CASE("single matrix elements against the holomorphic action") {
        const double k = 3.0;
        const DSGenerators g = build_ds_generators(DSWeight(k), 6);

        // K- e_{(0,1)} = sqrt(k - 1/2) e_{(0,0)}.
        const int src = g.basis.ds_index(0, 1);
        const int dst = g.basis.ds_index(0, 0);
        CHECK(std::abs(g.K_minus.mat(dst, src) - std::sqrt(k - 0.5)) <= 1e-15);

        // a e_{(2,0)} = sqrt(2) e_{(1,0)}.
        CHECK(std::abs(g.a.mat(g.basis.ds_index(1, 0), g.basis.ds_index(2, 0)) -
                       std::sqrt(2.0)) <= 1e-15);

        // K0 diagonal k/2 + n'/2 + n.
        for (int i = 0; i < g.basis.dim(); ++i) {
            const DsLabel l = g.basis.ds_label(i);
            CHECK(std::abs(g.K0.mat(i, i) - (0.5 * k + 0.5 * l.n_prime + l.n)) <= 1e-14);
        }

        CHECK(max_abs_diff(g.K_plus.mat, g.K_minus.mat.adjoint()) == 0.0);
        CHECK(max_abs_diff(g.a_dag.mat, g.a.mat.adjoint()) == 0.0);
        CHECK(g.a.grade_shift.value() == -1);
        CHECK(g.K_minus.grade_shift.value() == -2);
        CHECK(g.W_minus.grade_shift.value() == -2);
    }

    TEST_CASE("boson and su(1,1) relations on the interior block") {
        for (double k : {1.7, 2.5, 3.0, 4.25}) {
            const int level = 10;
            const DSGenerators g = build_ds_generators(DSWeight(k), level);
            const int interior = 2 * level - 2;
            const TruncatedOperator id = identity_op(g.basis);

            CHECK(max_abs_diff_interior(commutator(g.a, g.a_dag), id, interior) <= 1e-12);
            CHECK(max_abs_diff_interior(commutator(g.K0, g.K_plus), g.K_plus, interior) <= 1e-12);
            CHECK(max_abs_diff_interior(commutator(g.K_minus, g.K_plus), 2.0 * g.K0, interior) <=
                  1e-12);
            CHECK(max_abs_diff_interior(commutator(g.a, g.K_plus), g.a_dag, interior) <= 1e-12);
            CHECK(max_abs_diff_interior(commutator(g.K_minus, g.a), zero_op(g.basis), interior) <=
                  1e-12);
            CHECK(max_abs_diff_interior(2.0 * commutator(g.a, g.K0), g.a, interior) <= 1e-12);
        }
    }

    TEST_CASE("the W sector commutes with the oscillator and closes") {
        const DSGenerators g = build_ds_generators(DSWeight(1.7), 8);
        const int interior = 14;
        const TruncatedOperator zero = zero_op(g.basis);
        for (const TruncatedOperator* w : {&g.W0, &g.W_plus, &g.W_minus})
            CHECK(max_abs_diff_interior(commutator(g.a, *w), zero, interior) <= 1e-12);
        CHECK(max_abs_diff_interior(commutator(g.W0, g.W_plus), g.W_plus, interior) <= 1e-12);
        CHECK(max_abs_diff_interior(commutator(g.W_minus, g.W_plus), 2.0 * g.W0, interior) <=
              1e-12);

        // W0 is diagonal with entries (2k-1)/4 + n.
        for (int i = 0; i < g.basis.dim(); ++i) {
            const DsLabel l = g.basis.ds_label(i);
            CHECK(std::abs(g.W0.mat(i, i) - ((2.0 * 1.7 - 1.0) / 4.0 + l.n)) <= 1e-13);
        }
    }

    TEST_CASE("casimir scalar") {
        const CasimirReport at_25 = ds_casimir(DSWeight(2.5), 8);
        CHECK(at_25.expected == 0.0);
        CHECK(at_25.max_interior_deviation <= 1e-12);

        const CasimirReport at_3 = ds_casimir(DSWeight(3.0), 8);
        CHECK(at_3.expected == doctest::Approx(0.3125).epsilon(1e-15));
        CHECK(at_3.max_interior_deviation <= 1e-10);

        const CasimirReport at_17 = ds_casimir(DSWeight(1.7), 10);
        CHECK(at_17.max_interior_deviation < 1e-10);

        CHECK_THROWS_AS(ds_casimir(DSWeight(3.0), 2), Error);
    }

    TEST_CASE("normalized monomials") {
        const DSWeight k(3.0);
        CHECK(ds_poly(k, 0, 0).coeff(0, 0) == cplx(1.0));
        CHECK(ds_poly(k, 1, 0).coeff(1, 0) == cplx(1.0));
        CHECK(std::abs(ds_poly(k, 0, 1).coeff(0, 1) - std::sqrt(2.5)) <= 1e-15);
    }

    TEST_CASE("holomorphic action on constants") {
        const DSWeight k(3.0);
        const BivarPoly one = BivarPoly::constant(VarPair::ZZeta, 1.0);
        CHECK(max_abs_coeff_diff(sigma_k_apply(k, GenName::K0, one),
                                 BivarPoly::constant(VarPair::ZZeta, 1.5)) == 0.0);

        const BivarPoly k_plus_one = sigma_k_apply(k, GenName::KPlus, one);
        CHECK(k_plus_one.coeff(2, 0) == cplx(0.5));
        CHECK(k_plus_one.coeff(0, 1) == cplx(2.5));
        CHECK(k_plus_one.terms().size() == 2);

        BivarPoly wrong(VarPair::AlphaW);
        wrong.add_term(1, 0, 1.0);
        CHECK_THROWS_AS(sigma_k_apply(k, GenName::A, wrong), Error);
    }

    TEST_CASE("intertwining with the generator matrices") {
        CHECK(intertwine_check_ds(DSWeight(3.0), 8) <= 1e-12);
        CHECK(intertwine_check_ds(DSWeight(1.7), 8) <= 1e-12);
    }
}
