#ifndef JACOBI_SW_REP_HPP
#define JACOBI_SW_REP_HPP

#include "jacobi/bivar_poly.hpp"
#include "jacobi/exact_poly.hpp"
#include "jacobi/operator_core.hpp"

namespace jacobi {

// Index data of the Schroedinger-Weil family: mu = 2*pi*m, sigma = sign(mu),
// hbar = 1/(2 mu^2).
//
// Observables below use the normalized quadratures q = sqrt(hbar/2)(a + a+),
// p = -i sqrt(hbar/2)(a - a+).  The differential-operator dictionary
// P = sqrt|mu| (a - a+), Q = i sigma sqrt|mu| (a + a+) gives the position
// operator q = (a + a+)/(2 sqrt|mu|), which coincides with the normalized
// convention exactly when |mu| = 1 (m = 1/(2 pi)); the covariance formulas
// assume the normalized one, so that is what the matrices realize.
struct SWIndex {
    double m;
    double mu;
    int sigma;
    double hbar;
    explicit SWIndex(double m_index);
};

struct SWGenerators {
    Basis basis;
    SWIndex index;
    TruncatedOperator a, a_dag, K0, K_plus, K_minus;
    TruncatedOperator W0, W_plus, W_minus;
    TruncatedOperator q, p, num;
};

// Ladder pair on the SW basis: a has sqrt(n) at (n-1, n), a_dag = adjoint(a).
std::pair<TruncatedOperator, TruncatedOperator> build_ladder(int cutoff);

// Full generator bundle; needs cutoff >= 2.  K- = a^2/2, K+ = (a+)^2/2,
// K0 = a+a/2 + 1/4, and the W operators all vanish identically.
SWGenerators build_sw_generators(int cutoff, const SWIndex& index);

// f_n(alpha, w) = sqrt(n!) sum_j alpha^(n-2j) (w/2)^j / ((n-2j)! j!).
BivarPoly f_poly(int n);

// Same polynomial divided by sqrt(n!), with exact rational coefficients.
BivarPolyQ f_poly_exact(int n);

// |exp(alpha z + w z^2/2) - sum_{n<terms} z^n f_n(alpha, w)/sqrt(n!)|.
double generating_residual(cplx z, cplx alpha, cplx w, int terms);

// d^2 f/d alpha^2 - 2 df/dw, in double and in exact coefficient arithmetic.
BivarPoly heat_pde_residual(const BivarPoly& f);
BivarPolyQ heat_pde_residual(const BivarPolyQ& f);

// Differential-operator action on the (alpha, w) model:
//   a -> d/da,  a+ -> alpha + w d/da,  K- -> d/dw,
//   K0 -> 1/4 + (alpha/2) d/da + w d/dw,
//   K+ -> alpha^2/2 + w/2 + alpha w d/da + w^2 d/dw.
BivarPoly pi0_apply(GenName x, const BivarPoly& f);

// Expands a polynomial in the f_n basis (n <= max_n).  The expansion reads
// the pure-alpha coefficients at w = 0; remainder holds whatever part of the
// input is not reproduced by the expansion (zero for anything in the span).
struct FExpansion {
    std::vector<cplx> coeffs;
    double remainder;
};
FExpansion expand_in_f_basis(const BivarPoly& p, int max_n);

// Max deviation between the matrices of the differential operators over
// {f_n, n <= cutoff} and the Fock matrices from build_sw_generators; also
// folds in the expansion remainders.
double intertwine_check_sw(int cutoff);

} // namespace jacobi

#endif
