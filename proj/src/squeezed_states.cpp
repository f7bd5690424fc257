#include "jacobi/squeezed_states.hpp"

#include <cmath>

#include "jacobi/errors.hpp"
#include "jacobi/special_functions.hpp"

namespace jacobi {

SqueezeParams::SqueezeParams(cplx alpha_in, cplx w_in) : alpha(alpha_in), w(w_in) {
    const double w2 = std::norm(w_in);
    if (!(w2 < 1.0)) throw Error(Errc::domain_error, "squeeze parameter needs |w| < 1");
    r = 1.0 / std::sqrt(1.0 - w2);
    eta = std::log(1.0 - w2);
}

namespace {

cplx ipow(cplx base, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

struct LadderPair {
    TruncatedOperator a;
    TruncatedOperator a_dag;
};

LadderPair basis_ladder(const Basis& basis) {
    if (basis.kind() == RepKind::SW) {
        auto [a, a_dag] = build_ladder(basis.sw_cutoff());
        return {std::move(a), std::move(a_dag)};
    }
    DSGenerators g = build_ds_generators(DSWeight(basis.ds_weight()), basis.ds_level());
    return {std::move(g.a), std::move(g.a_dag)};
}

struct KTriple {
    TruncatedOperator K0;
    TruncatedOperator K_plus;
    TruncatedOperator K_minus;
};

KTriple basis_k_ops(const Basis& basis) {
    if (basis.kind() == RepKind::SW) {
        SWGenerators g = build_sw_generators(basis.sw_cutoff(), SWIndex(1.0 / (2.0 * M_PI)));
        return {std::move(g.K0), std::move(g.K_plus), std::move(g.K_minus)};
    }
    DSGenerators g = build_ds_generators(DSWeight(basis.ds_weight()), basis.ds_level());
    return {std::move(g.K0), std::move(g.K_plus), std::move(g.K_minus)};
}

} // namespace

TruncatedOperator displacement(cplx alpha, const Basis& basis) {
    const LadderPair l = basis_ladder(basis);
    if (alpha == 0.0) return identity_op(basis);
    const double scalar = std::exp(-0.5 * std::norm(alpha));
    return scalar * (graded_exp(l.a_dag, alpha) * graded_exp(l.a, -std::conj(alpha)));
}

TruncatedOperator squeeze(cplx w, const Basis& basis) {
    if (!(std::norm(w) < 1.0)) throw Error(Errc::domain_error, "squeeze needs |w| < 1");
    const KTriple k = basis_k_ops(basis);
    if (w == 0.0) return identity_op(basis);
    const double eta = std::log(1.0 - std::norm(w));
    return graded_exp(k.K_plus, w) * exp_diag(k.K0, eta) * graded_exp(k.K_minus, -std::conj(w));
}

TruncatedOperator squeezed_op(const SqueezeParams& params, const Basis& basis) {
    return displacement(params.alpha, basis) * squeeze(params.w, basis);
}

StateVector apply_squeezed(const SqueezeParams& params, const Basis& basis, int state_index) {
    StateVector v = basis_state(basis, state_index);
    if (params.w != 0.0) {
        const KTriple k = basis_k_ops(basis);
        v = apply_graded_exp(k.K_minus, -std::conj(params.w), v);
        v = apply_exp_diag(k.K0, params.eta, v);
        v = apply_graded_exp(k.K_plus, params.w, v);
    }
    if (params.alpha != 0.0) {
        const LadderPair l = basis_ladder(basis);
        v = apply_graded_exp(l.a, -std::conj(params.alpha), v);
        v = apply_graded_exp(l.a_dag, params.alpha, v);
        const double scalar = std::exp(-0.5 * std::norm(params.alpha));
        for (auto& x : v.coeffs) x *= scalar;
    }
    v.leakage = std::max(0.0, 1.0 - norm2(v.coeffs));
    return v;
}

cplx squeeze_me_closed(const DSWeight& weight, int n, int n_prime, cplx w) {
    if (n < 0 || n_prime < n)
        throw Error(Errc::invalid_argument,
                    "squeeze_me_closed needs n' >= n >= 0 (use the adjoint symmetry)");
    if (!(std::norm(w) < 1.0)) throw Error(Errc::domain_error, "squeeze_me_closed needs |w| < 1");
    const HalfWeight hw(weight.k);
    const int s = n_prime - n;
    const double x = std::norm(w);
    double s_fact = 1.0;
    for (int i = 2; i <= s; ++i) s_fact *= i;
    const double lam_ratio = lambda_coeff(weight.k, n) / lambda_coeff(weight.k, n_prime);
    const cplx w_pow = ipow(w, s);
    return lam_ratio / s_fact * w_pow * std::pow(1.0 - x, hw.h) *
           hyp2f1_terminating(n, s + n + 2.0 * hw.h, s + 1.0, x);
}

cplx displacement_me_closed(int row, int col, cplx alpha) {
    if (row < 0 || col < 0) throw Error(Errc::invalid_argument, "indices must be non-negative");
    if (row < col) return std::conj(displacement_me_closed(col, row, -alpha));
    const int s = row - col;
    double ratio = 1.0;  // col!/row! = 1/((col+1)...(row))
    for (int i = col + 1; i <= row; ++i) ratio /= i;
    const double x = std::norm(alpha);
    return std::sqrt(ratio) * ipow(alpha, s) * std::exp(-0.5 * x) * laguerre(col, s, x);
}

TransformedGenerators transformed_generators(const SqueezeParams& params, const AlgebraOps& ops) {
    const Basis& basis = ops.a.basis;
    const cplx alpha = params.alpha;
    const cplx w = params.w;
    const double r = params.r;
    const double r2 = r * r;
    const TruncatedOperator id = identity_op(basis);

    TruncatedOperator a_hat = r * (ops.a + w * ops.a_dag) + alpha * id;
    TruncatedOperator a_dag_hat = adjoint(a_hat);

    TruncatedOperator km_hat =
        r2 * (ops.K_minus + (2.0 * w) * ops.K0 + (w * w) * ops.K_plus) +
        (r * alpha) * (ops.a + w * ops.a_dag) + (0.5 * alpha * alpha) * id;
    TruncatedOperator kp_hat = adjoint(km_hat);

    // The displacement part of K0^ is the operator real part of
    // alpha (a+ + conj(w) a), i.e. (X + X+)/2.
    TruncatedOperator x = alpha * (ops.a_dag + std::conj(w) * ops.a);
    TruncatedOperator k0_hat =
        r2 * (std::conj(w) * ops.K_minus + (1.0 + std::norm(w)) * ops.K0 + w * ops.K_plus) +
        (0.5 * r) * (x + adjoint(x)) + (0.5 * std::norm(alpha)) * id;

    return {std::move(a_hat), std::move(a_dag_hat), std::move(k0_hat), std::move(kp_hat),
            std::move(km_hat)};
}

PolyWord parse_word(const std::vector<std::pair<GenName, int>>& factors) {
    // Canonical order: a+, K+, K0, K-, a.
    const GenName order[] = {GenName::ADag, GenName::KPlus, GenName::K0, GenName::KMinus,
                             GenName::A};
    PolyWord w;
    int cursor = 0;
    for (const auto& [gen, power] : factors) {
        if (power < 0) throw Error(Errc::invalid_argument, "word powers must be non-negative");
        int pos = -1;
        for (int i = cursor; i < 5; ++i)
            if (order[i] == gen) {
                pos = i;
                break;
            }
        if (pos < 0)
            throw Error(Errc::invalid_argument,
                        "word factors must follow the order a+ K+ K0 K- a without repeats");
        cursor = pos + 1;
        switch (gen) {
            case GenName::ADag: w.n_adag = power; break;
            case GenName::KPlus: w.n_kplus = power; break;
            case GenName::K0: w.n_k0 = power; break;
            case GenName::KMinus: w.n_kminus = power; break;
            case GenName::A: w.n_a = power; break;
        }
    }
    return w;
}

cplx expectation_poly(const PolyWord& word, const SqueezeParams& params, const AlgebraOps& ops,
                      const Basis& basis, int state_index) {
    if (state_index < 0 || state_index >= basis.dim())
        throw Error(Errc::invalid_argument, "state index out of range");
    // Worst-case grade climb: one per ladder factor, two per K factor (every
    // transformed K contains a K+ part).
    const int budget = word.n_adag + word.n_a + 2 * (word.n_kplus + word.n_k0 + word.n_kminus);
    const int state_grade = basis.grade(state_index);
    if (state_grade + budget > basis.max_grade()) {
        const int needed = (basis.kind() == RepKind::SW) ? state_grade + budget
                                                         : (state_grade + budget + 1) / 2;
        throw Error(Errc::cutoff_exceeded, "word grade budget exceeds the cutoff", needed);
    }

    const TransformedGenerators hat = transformed_generators(params, ops);
    StateVector v = basis_state(basis, state_index);
    for (int i = 0; i < word.n_a; ++i) v = apply(hat.a_hat, v);
    for (int i = 0; i < word.n_kminus; ++i) v = apply(hat.Km_hat, v);
    for (int i = 0; i < word.n_k0; ++i) v = apply(hat.K0_hat, v);
    for (int i = 0; i < word.n_kplus; ++i) v = apply(hat.Kp_hat, v);
    for (int i = 0; i < word.n_adag; ++i) v = apply(hat.a_dag_hat, v);
    return inner(basis_state(basis, state_index), v);
}

} // namespace jacobi
