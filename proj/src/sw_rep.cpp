#include "jacobi/sw_rep.hpp"

#include <cmath>

#include "jacobi/errors.hpp"

namespace jacobi {

SWIndex::SWIndex(double m_index) {
    if (m_index == 0.0) throw Error(Errc::invalid_argument, "SW index needs m != 0");
    m = m_index;
    mu = 2.0 * M_PI * m_index;
    sigma = mu > 0.0 ? 1 : -1;
    hbar = 1.0 / (2.0 * mu * mu);
}

std::pair<TruncatedOperator, TruncatedOperator> build_ladder(int cutoff) {
    const Basis basis = Basis::sw(cutoff);
    CMatrix lower(basis.dim(), basis.dim());
    for (int n = 1; n <= cutoff; ++n) lower(n - 1, n) = std::sqrt(static_cast<double>(n));
    TruncatedOperator a = make_operator(basis, std::move(lower), -1);
    TruncatedOperator a_dag = adjoint(a);
    return {std::move(a), std::move(a_dag)};
}

SWGenerators build_sw_generators(int cutoff, const SWIndex& index) {
    if (cutoff < 2) throw Error(Errc::invalid_argument, "SW generators need cutoff >= 2");
    auto [a, a_dag] = build_ladder(cutoff);
    const Basis basis = a.basis;

    TruncatedOperator K_minus = 0.5 * (a * a);
    TruncatedOperator K_plus = adjoint(K_minus);
    TruncatedOperator num = a_dag * a;
    TruncatedOperator K0 = 0.5 * num + 0.25 * identity_op(basis);

    // The oscillator saturates the K operators, so the W sector vanishes.
    TruncatedOperator W_minus = K_minus - 0.5 * (a * a);
    TruncatedOperator W_plus = K_plus - 0.5 * (a_dag * a_dag);
    TruncatedOperator W0 = K0 - 0.5 * (a_dag * a) - 0.25 * identity_op(basis);

    const double c = std::sqrt(index.hbar / 2.0);
    TruncatedOperator q = c * (a + a_dag);
    TruncatedOperator p = cplx(0.0, -c) * (a - a_dag);

    return SWGenerators{basis,
                        index,
                        std::move(a),
                        std::move(a_dag),
                        std::move(K0),
                        std::move(K_plus),
                        std::move(K_minus),
                        std::move(W0),
                        std::move(W_plus),
                        std::move(W_minus),
                        std::move(q),
                        std::move(p),
                        std::move(num)};
}

BivarPoly f_poly(int n) {
    if (n < 0) throw Error(Errc::invalid_argument, "f_poly needs n >= 0");
    double fact = 1.0;
    for (int j = 2; j <= n; ++j) fact *= j;
    const double scale = std::sqrt(fact);
    BivarPoly p(VarPair::AlphaW);
    for (int j = 0; 2 * j <= n; ++j) {
        double denom = 1.0;
        for (int i = 2; i <= n - 2 * j; ++i) denom *= i;
        for (int i = 2; i <= j; ++i) denom *= i;
        const double pow2 = std::ldexp(1.0, j);  // 2^j
        p.add_term(n - 2 * j, j, scale / (denom * pow2));
    }
    return p;
}

BivarPolyQ f_poly_exact(int n) {
    if (n < 0) throw Error(Errc::invalid_argument, "f_poly_exact needs n >= 0");
    BivarPolyQ p;
    for (int j = 0; 2 * j <= n; ++j) {
        __int128 denom = 1;
        for (int i = 2; i <= n - 2 * j; ++i) denom *= i;
        for (int i = 2; i <= j; ++i) denom *= i;
        for (int i = 0; i < j; ++i) denom *= 2;
        p.add_term(n - 2 * j, j, Rat(1, denom));
    }
    return p;
}

double generating_residual(cplx z, cplx alpha, cplx w, int terms) {
    if (terms < 1) throw Error(Errc::invalid_argument, "generating_residual needs terms >= 1");
    const cplx target = std::exp(alpha * z + 0.5 * w * z * z);
    cplx sum = 0.0;
    cplx zpow = 1.0;
    double fact = 1.0;
    for (int n = 0; n < terms; ++n) {
        if (n > 0) {
            zpow *= z;
            fact *= n;
        }
        sum += zpow / std::sqrt(fact) * f_poly(n).eval(alpha, w);
    }
    return std::abs(target - sum);
}

BivarPoly heat_pde_residual(const BivarPoly& f) {
    if (f.vars() != VarPair::AlphaW)
        throw Error(Errc::invalid_argument, "heat_pde_residual needs an (alpha, w) polynomial");
    return f.d_var1().d_var1() - 2.0 * f.d_var2();
}

BivarPolyQ heat_pde_residual(const BivarPolyQ& f) {
    BivarPolyQ dw = f.d_var2();
    BivarPolyQ r = f.d_var1().d_var1();
    BivarPolyQ two_dw;
    for (const auto& [key, c] : dw.terms()) two_dw.add_term(key.first, key.second, Rat(2) * c);
    r -= two_dw;
    return r;
}

BivarPoly pi0_apply(GenName x, const BivarPoly& f) {
    if (f.vars() != VarPair::AlphaW)
        throw Error(Errc::invalid_argument, "pi0_apply needs an (alpha, w) polynomial");
    switch (x) {
        case GenName::A:
            return f.d_var1();
        case GenName::ADag:
            return f.shift_var1(1) + f.d_var1().shift_var2(1);
        case GenName::KMinus:
            return f.d_var2();
        case GenName::K0:
            return 0.25 * f + 0.5 * f.d_var1().shift_var1(1) + f.d_var2().shift_var2(1);
        case GenName::KPlus:
            return 0.5 * f.shift_var1(2) + 0.5 * f.shift_var2(1) +
                   f.d_var1().shift_var1(1).shift_var2(1) + f.d_var2().shift_var2(2);
    }
    throw Error(Errc::invalid_argument, "unknown generator");
}

FExpansion expand_in_f_basis(const BivarPoly& p, int max_n) {
    // Only f_m contributes the monomial alpha^m w^0, with weight 1/sqrt(m!).
    FExpansion e;
    e.coeffs.resize(max_n + 1, 0.0);
    BivarPoly rest = p;
    double fact = 1.0;
    for (int m = 0; m <= max_n; ++m) {
        if (m > 1) fact *= m;
        const cplx c = p.coeff(m, 0) * std::sqrt(fact);
        e.coeffs[m] = c;
        if (c != 0.0) rest -= c * f_poly(m);
    }
    e.remainder = rest.max_abs_coeff();
    return e;
}

double intertwine_check_sw(int cutoff) {
    if (cutoff < 4) throw Error(Errc::invalid_argument, "intertwine_check_sw needs cutoff >= 4");
    const SWGenerators gens = build_sw_generators(cutoff, SWIndex(1.0 / (2.0 * M_PI)));
    const GenName names[] = {GenName::A, GenName::ADag, GenName::K0, GenName::KPlus,
                             GenName::KMinus};
    const TruncatedOperator* mats[] = {&gens.a, &gens.a_dag, &gens.K0, &gens.K_plus,
                                       &gens.K_minus};
    double dev = 0.0;
    for (int g = 0; g < 5; ++g) {
        for (int n = 0; n <= cutoff; ++n) {
            const BivarPoly image = pi0_apply(names[g], f_poly(n));
            // Raising images of the top columns stick out of the retained
            // basis; expand up to the true degree and compare what overlaps.
            const FExpansion e = expand_in_f_basis(image, cutoff + 2);
            dev = std::max(dev, e.remainder);
            for (int m = 0; m <= cutoff; ++m)
                dev = std::max(dev, std::abs(mats[g]->mat(m, n) - e.coeffs[m]));
        }
    }
    return dev;
}

} // namespace jacobi
