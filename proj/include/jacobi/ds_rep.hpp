#ifndef JACOBI_DS_REP_HPP
#define JACOBI_DS_REP_HPP

#include "jacobi/bivar_poly.hpp"
#include "jacobi/operator_core.hpp"

namespace jacobi {

// Positive discrete-series weight; the construction needs k > 1/2
// (measure-level statements additionally need k > 3/2, not used here).
struct DSWeight {
    double k;
    explicit DSWeight(double weight);
};

struct DSGenerators {
    Basis basis;
    double k;
    TruncatedOperator a, a_dag, K0, K_plus, K_minus;
    TruncatedOperator W0, W_plus, W_minus;
};

// Generator matrices in the orthonormal two-index basis.  Matrix elements
// come from acting with the holomorphic model on normalized monomials:
//   a:  (n', n) -> (n'-1, n)  sqrt(n')
//   K-: (n', n) -> (n'-2, n)  sqrt(n'(n'-1))/2   and
//       (n', n) -> (n', n-1)  sqrt(n (k - 3/2 + n))
//   K0: diagonal k/2 + n'/2 + n,  K+ = adjoint(K-), a+ = adjoint(a);
// W operators follow by subtracting the oscillator parts.
DSGenerators build_ds_generators(const DSWeight& weight, int level);

struct CasimirReport {
    TruncatedOperator op;
    double expected;
    double max_interior_deviation;
};

// Casimir W0^2 - (W+W- + W-W+)/2 against the scalar (k-1/2)(k-5/2)/4 on
// states of grade <= 2*level - 2 (degree-2 products corrupt the top two
// grades).
CasimirReport ds_casimir(const DSWeight& weight, int level);

// Normalized monomial f^[k]_{n'n}(z, zeta) = D^[k]_{n'n} z^n' zeta^n with
// D^[k]_{n'n} = sqrt((k - 1/2)_n / (n! n'!)).
BivarPoly ds_poly(const DSWeight& weight, int n_prime, int n);

// Differential-operator action on the (z, zeta) model:
//   a -> d/dz,  a+ -> z,  K0 -> k/2 + (z/2) d/dz + zeta d/dzeta,
//   K- -> (1/2) d^2/dz^2 + d/dzeta,
//   K+ -> z^2/2 + (k - 1/2) zeta + zeta^2 d/dzeta.
BivarPoly sigma_k_apply(const DSWeight& weight, GenName x, const BivarPoly& f);

// Matrices of the differential operators over the f^[k] basis vs the hard
// coded generator matrices; returns the max entry deviation.
double intertwine_check_ds(const DSWeight& weight, int level);

} // namespace jacobi

#endif
