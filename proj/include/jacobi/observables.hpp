#ifndef JACOBI_OBSERVABLES_HPP
#define JACOBI_OBSERVABLES_HPP

#include "jacobi/squeezed_states.hpp"

namespace jacobi {

struct CovarianceTriple {
    double sigma_qq;
    double sigma_pp;
    double sigma_pq;
    double hbar;
    double n0;  // n + 1/2
};

// Closed forms over the squeezed state T(alpha, w) phi_n (alpha drops out):
// sigma_qq = n0 hbar u+, sigma_pp = n0 hbar u-, sigma_pq = 2 n0 hbar r^2 Im w,
// with u(+/-) = r^2 (1 +/- w)(1 +/- conj(w)).
CovarianceTriple covariance_closed(int n, cplx w, double hbar);

// Same triple from moments of q and p over the numerically squeezed state.
// Throws if the truncation leakage of T(alpha,w) phi_n exceeds the budget.
CovarianceTriple covariance_numeric(int n, const SqueezeParams& params, const SWGenerators& gens,
                                    double leakage_budget = 1e-10);

// Discrete-series variant used to probe which index plays the role of n:
// q and p are built from the DS a-ladder, so the oscillator index n' is the
// one the closed form should see.  Reported, not asserted, by the suites.
CovarianceTriple covariance_numeric_ds(DsLabel state, const SqueezeParams& params,
                                       const DSGenerators& gens, double hbar,
                                       double leakage_budget = 1e-10);

struct SqueezeDisk {
    cplx center;
    double radius;
};

// The squeezing region |(2 n0 + 1) w + 2 n0| < 1 as an explicit disk.
SqueezeDisk squeezing_disk(int n);

// 2 n0 u+ < 1; agrees with membership in squeezing_disk(n).
bool is_squeezed(int n, cplx w);

// Mandel Q for T(alpha, w) phi_n in closed form.  Throws on the vacuum
// (n = 0, alpha = 0, w = 0), where <N> = 0 and Q is undefined.
double mandel_q_closed(cplx alpha, cplx w, int n);

// Q from <N> and <N^2> through the expectation engine, using the normal
// ordering N^2 = a+^2 a^2 + N.
double mandel_q_numeric(cplx alpha, cplx w, int n, const SWGenerators& gens);

// Radius |w| at which Q(0, w, n) vanishes:
//   |w|^2 = [sqrt(16 n0^4 + 24 n0^2 - 3) - 4 n0^2 - 1] / (2 (2 n0 + 1)).
// Throws if the bracketed expression is negative (flagged, not guessed).
// For n = 0 the radius is 0, where Q itself degenerates to 0/0 (vacuum);
// the zero-locus identity still holds there in polynomial form.
double mandel_zero_radius(int n);

} // namespace jacobi

#endif
