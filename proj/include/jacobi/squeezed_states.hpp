#ifndef JACOBI_SQUEEZED_STATES_HPP
#define JACOBI_SQUEEZED_STATES_HPP

#include <vector>

#include "jacobi/ds_rep.hpp"
#include "jacobi/operator_core.hpp"
#include "jacobi/sw_rep.hpp"

namespace jacobi {

// Squeeze parameters (alpha, w) with |w| < 1 and the derived quantities
// r = (1 - |w|^2)^(-1/2), eta = ln(1 - |w|^2).
struct SqueezeParams {
    cplx alpha;
    cplx w;
    double r;
    double eta;
    SqueezeParams(cplx alpha_in, cplx w_in);
};

// D(alpha) = exp(alpha a+ - conj(alpha) a) built from the disentangled form
// exp(-|alpha|^2/2) exp(alpha a+) exp(-conj(alpha) a).  Works on either
// basis; retained entries are exact wherever the ladder chains stay inside
// the grade window.
TruncatedOperator displacement(cplx alpha, const Basis& basis);

// S(w) = exp(w K+) exp(eta K0) exp(-conj(w) K-), |w| < 1.
TruncatedOperator squeeze(cplx w, const Basis& basis);

// T(alpha, w) = D(alpha) S(w).
TruncatedOperator squeezed_op(const SqueezeParams& params, const Basis& basis);

// T(alpha, w) applied to a basis state, with leakage = 1 - |result|^2.
StateVector apply_squeezed(const SqueezeParams& params, const Basis& basis, int state_index);

// Discrete-series squeeze matrix element between (0, n') and (0, n) in
// closed form, n' >= n:
//   (lambda_kn / (lambda_kn' s!)) w^s (1-|w|^2)^h F(-n, s+n+2h; s+1; |w|^2)
// with s = n' - n and h = (2k-1)/4.  This is the matrix element of the
// squeeze generated by the W sector alone; the operator built by squeeze()
// on a DS basis carries an extra oscillator-vacuum factor (1-|w|^2)^(1/4).
// See docs in the verification suite, which pins the factor empirically.
cplx squeeze_me_closed(const DSWeight& weight, int n, int n_prime, cplx w);

// <row| D(alpha) |col> via the Laguerre closed form; the row < col branch is
// the reflection through conj(<col| D(-alpha) |row>).
cplx displacement_me_closed(int row, int col, cplx alpha);

// View over the five generators the squeezed-frame algebra needs.
struct AlgebraOps {
    const TruncatedOperator& a;
    const TruncatedOperator& a_dag;
    const TruncatedOperator& K0;
    const TruncatedOperator& K_plus;
    const TruncatedOperator& K_minus;
};
inline AlgebraOps ops_view(const SWGenerators& g) {
    return {g.a, g.a_dag, g.K0, g.K_plus, g.K_minus};
}
inline AlgebraOps ops_view(const DSGenerators& g) {
    return {g.a, g.a_dag, g.K0, g.K_plus, g.K_minus};
}

// X^ = S(-w) D(-alpha) X D(alpha) S(w) as closed linear combinations:
//   a^  = r (a + w a+) + alpha
//   K-^ = r^2 (K- + 2w K0 + w^2 K+) + r alpha (a + w a+) + (alpha^2/2) I
//   K0^ = r^2 [cw K- + (1+|w|^2) K0 + w K+]
//         + (r/2) [alpha (a+ + cw a) + c(alpha) (a + w a+)] + (|alpha|^2/2) I
// (cw = conj(w); the mixed term is the self-adjoint real part of
// alpha (a+ + cw a)), and a+^, K+^ are the adjoints.
struct TransformedGenerators {
    TruncatedOperator a_hat, a_dag_hat, K0_hat, Kp_hat, Km_hat;
};
TransformedGenerators transformed_generators(const SqueezeParams& params, const AlgebraOps& ops);

// Monomial word in the fixed normal-ordered form a+^n K+^m K0^s K-^m' a^n'.
struct PolyWord {
    int n_adag = 0;
    int n_kplus = 0;
    int n_k0 = 0;
    int n_kminus = 0;
    int n_a = 0;
};

// Front end that accepts (generator, power) pairs and validates that they
// respect the canonical order with no repeats.
PolyWord parse_word(const std::vector<std::pair<GenName, int>>& factors);

// <state| A^ |state> where A^ substitutes the transformed generators into the
// word; equals <T(alpha,w) state| A |T(alpha,w) state> on the untruncated
// space.  Throws if the word's grade budget does not fit inside the cutoff
// (reporting the cutoff that would suffice).
cplx expectation_poly(const PolyWord& word, const SqueezeParams& params, const AlgebraOps& ops,
                      const Basis& basis, int state_index);

} // namespace jacobi

#endif
