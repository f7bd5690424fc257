#include "jacobi/observables.hpp"

#include <cmath>

#include "jacobi/errors.hpp"

namespace jacobi {

CovarianceTriple covariance_closed(int n, cplx w, double hbar) {
    if (n < 0) throw Error(Errc::invalid_argument, "covariance_closed needs n >= 0");
    if (!(std::norm(w) < 1.0)) throw Error(Errc::domain_error, "covariance_closed needs |w| < 1");
    const double n0 = n + 0.5;
    const double r2 = 1.0 / (1.0 - std::norm(w));
    const double u_plus = r2 * std::norm(1.0 + w);
    const double u_minus = r2 * std::norm(1.0 - w);
    return {n0 * hbar * u_plus, n0 * hbar * u_minus, 2.0 * n0 * hbar * r2 * w.imag(), hbar, n0};
}

namespace {

CovarianceTriple covariance_from_state(const StateVector& state, const TruncatedOperator& q,
                                       const TruncatedOperator& p, double hbar, double n0,
                                       double leakage_budget) {
    if (state.leakage > leakage_budget)
        throw Error(Errc::leakage_budget, "truncation leakage exceeds the budget");
    const double nrm = norm2(state.coeffs);
    const StateVector qv = apply(q, state);
    const StateVector pv = apply(p, state);
    const double mean_q = (inner(state, qv) / nrm).real();
    const double mean_p = (inner(state, pv) / nrm).real();
    const double qq = (inner(qv, qv) / nrm).real();
    const double pp = (inner(pv, pv) / nrm).real();
    const double qp_sym = (inner(qv, pv) / nrm).real();  // Re<qv|pv> = <(qp+pq)/2>
    return {qq - mean_q * mean_q, pp - mean_p * mean_p, qp_sym - mean_q * mean_p, hbar, n0};
}

} // namespace

CovarianceTriple covariance_numeric(int n, const SqueezeParams& params, const SWGenerators& gens,
                                    double leakage_budget) {
    const StateVector state = apply_squeezed(params, gens.basis, n);
    return covariance_from_state(state, gens.q, gens.p, gens.index.hbar, n + 0.5, leakage_budget);
}

CovarianceTriple covariance_numeric_ds(DsLabel label, const SqueezeParams& params,
                                       const DSGenerators& gens, double hbar,
                                       double leakage_budget) {
    const int index = gens.basis.ds_index(label.n_prime, label.n);
    if (index < 0) throw Error(Errc::invalid_argument, "DS state outside the basis");
    const StateVector state = apply_squeezed(params, gens.basis, index);
    const double c = std::sqrt(hbar / 2.0);
    const TruncatedOperator q = c * (gens.a + gens.a_dag);
    const TruncatedOperator p = cplx(0.0, -c) * (gens.a - gens.a_dag);
    return covariance_from_state(state, q, p, hbar, label.n_prime + 0.5, leakage_budget);
}

SqueezeDisk squeezing_disk(int n) {
    if (n < 0) throw Error(Errc::invalid_argument, "squeezing_disk needs n >= 0");
    const double n0 = n + 0.5;
    return {cplx(-2.0 * n0 / (2.0 * n0 + 1.0), 0.0), 1.0 / (2.0 * n0 + 1.0)};
}

bool is_squeezed(int n, cplx w) {
    if (n < 0) throw Error(Errc::invalid_argument, "is_squeezed needs n >= 0");
    if (!(std::norm(w) < 1.0)) throw Error(Errc::domain_error, "is_squeezed needs |w| < 1");
    const double n0 = n + 0.5;
    const double u_plus = std::norm(1.0 + w) / (1.0 - std::norm(w));
    return 2.0 * n0 * u_plus < 1.0;
}

double mandel_q_closed(cplx alpha, cplx w, int n) {
    if (n < 0) throw Error(Errc::invalid_argument, "mandel_q_closed needs n >= 0");
    const double w2 = std::norm(w);
    if (!(w2 < 1.0)) throw Error(Errc::domain_error, "mandel_q_closed needs |w| < 1");
    const double n0 = n + 0.5;
    const double one_minus = 1.0 - w2;
    const double numer = (4.0 * n0 * n0 + 3.0) * w2 +
                         4.0 * n0 * std::norm(alpha * std::conj(w) + std::conj(alpha)) * one_minus;
    const double denom =
        2.0 * n0 * (1.0 - w2 * w2) + (2.0 * std::norm(alpha) - 1.0) * one_minus * one_minus;
    if (denom == 0.0)
        throw Error(Errc::domain_error, "Mandel Q undefined: <N> = 0 (vacuum state)");
    return numer / denom - 1.0;
}

double mandel_q_numeric(cplx alpha, cplx w, int n, const SWGenerators& gens) {
    const SqueezeParams params(alpha, w);
    const AlgebraOps ops = ops_view(gens);
    PolyWord number;
    number.n_adag = 1;
    number.n_a = 1;
    PolyWord quartic;
    quartic.n_adag = 2;
    quartic.n_a = 2;
    const double mean_n = expectation_poly(number, params, ops, gens.basis, n).real();
    const double mean_aadaa = expectation_poly(quartic, params, ops, gens.basis, n).real();
    if (mean_n == 0.0)
        throw Error(Errc::domain_error, "Mandel Q undefined: <N> = 0 (vacuum state)");
    const double var = mean_aadaa + mean_n - mean_n * mean_n;  // <N^2> = <a+^2 a^2> + <N>
    return var / mean_n - 1.0;
}

double mandel_zero_radius(int n) {
    if (n < 0) throw Error(Errc::invalid_argument, "mandel_zero_radius needs n >= 0");
    const double n0 = n + 0.5;
    const double disc = 16.0 * n0 * n0 * n0 * n0 + 24.0 * n0 * n0 - 3.0;
    if (disc < 0.0)
        throw Error(Errc::domain_error, "mandel_zero_radius: discriminant is negative");
    const double w2 = (std::sqrt(disc) - 4.0 * n0 * n0 - 1.0) / (2.0 * (2.0 * n0 + 1.0));
    if (w2 < 0.0 || w2 >= 1.0)
        throw Error(Errc::domain_error, "mandel_zero_radius: radius outside [0, 1)");
    return std::sqrt(w2);
}

} // namespace jacobi
