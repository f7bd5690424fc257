#include "jacobi/ds_rep.hpp"

#include <cmath>

#include "jacobi/errors.hpp"
#include "jacobi/special_functions.hpp"

namespace jacobi {

DSWeight::DSWeight(double weight) : k(weight) {
    if (!(weight > 0.5)) throw Error(Errc::domain_error, "discrete series needs k > 1/2");
}

DSGenerators build_ds_generators(const DSWeight& weight, int level) {
    if (level < 2) throw Error(Errc::invalid_argument, "DS generators need level >= 2");
    const double k = weight.k;
    const Basis basis = Basis::ds(k, level);
    const int dim = basis.dim();

    CMatrix a_mat(dim, dim);
    CMatrix km_mat(dim, dim);
    CMatrix k0_mat(dim, dim);
    for (int j = 0; j < dim; ++j) {
        const DsLabel lbl = basis.ds_label(j);
        const int np = lbl.n_prime;
        const int n = lbl.n;
        k0_mat(j, j) = 0.5 * k + 0.5 * np + n;
        if (np >= 1) a_mat(basis.ds_index(np - 1, n), j) = std::sqrt(static_cast<double>(np));
        if (np >= 2)
            km_mat(basis.ds_index(np - 2, n), j) =
                0.5 * std::sqrt(static_cast<double>(np) * (np - 1));
        if (n >= 1) km_mat(basis.ds_index(np, n - 1), j) = std::sqrt(n * (k - 1.5 + n));
    }

    TruncatedOperator a = make_operator(basis, std::move(a_mat), -1);
    TruncatedOperator a_dag = adjoint(a);
    TruncatedOperator K_minus = make_operator(basis, std::move(km_mat), -2);
    TruncatedOperator K_plus = adjoint(K_minus);
    TruncatedOperator K0 = make_operator(basis, std::move(k0_mat), 0);

    TruncatedOperator W_minus = K_minus - 0.5 * (a * a);
    TruncatedOperator W_plus = K_plus - 0.5 * (a_dag * a_dag);
    TruncatedOperator W0 = K0 - 0.5 * (a_dag * a) - 0.25 * identity_op(basis);

    return DSGenerators{basis,
                        k,
                        std::move(a),
                        std::move(a_dag),
                        std::move(K0),
                        std::move(K_plus),
                        std::move(K_minus),
                        std::move(W0),
                        std::move(W_plus),
                        std::move(W_minus)};
}

CasimirReport ds_casimir(const DSWeight& weight, int level) {
    if (level < 3) throw Error(Errc::invalid_argument, "ds_casimir needs level >= 3");
    const DSGenerators g = build_ds_generators(weight, level);
    const TruncatedOperator casimir =
        g.W0 * g.W0 - 0.5 * (g.W_plus * g.W_minus + g.W_minus * g.W_plus);
    const double expected = (weight.k - 0.5) * (weight.k - 2.5) / 4.0;
    const TruncatedOperator target = expected * identity_op(g.basis);
    const double dev = max_abs_diff_interior(casimir, target, 2 * level - 2);
    return CasimirReport{casimir, expected, dev};
}

BivarPoly ds_poly(const DSWeight& weight, int n_prime, int n) {
    if (n_prime < 0 || n < 0) throw Error(Errc::invalid_argument, "ds_poly needs n', n >= 0");
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int i = 2; i <= n_prime; ++i) fact *= i;
    const double norm = std::sqrt(pochhammer(weight.k - 0.5, n) / fact);
    BivarPoly p(VarPair::ZZeta);
    p.add_term(n_prime, n, norm);
    return p;
}

BivarPoly sigma_k_apply(const DSWeight& weight, GenName x, const BivarPoly& f) {
    if (f.vars() != VarPair::ZZeta)
        throw Error(Errc::invalid_argument, "sigma_k_apply needs a (z, zeta) polynomial");
    const double k = weight.k;
    switch (x) {
        case GenName::A:
            return f.d_var1();
        case GenName::ADag:
            return f.shift_var1(1);
        case GenName::K0:
            return 0.5 * k * f + 0.5 * f.d_var1().shift_var1(1) + f.d_var2().shift_var2(1);
        case GenName::KMinus:
            return 0.5 * f.d_var1().d_var1() + f.d_var2();
        case GenName::KPlus:
            return 0.5 * f.shift_var1(2) + (k - 0.5) * f.shift_var2(1) +
                   f.d_var2().shift_var2(2);
    }
    throw Error(Errc::invalid_argument, "unknown generator");
}

double intertwine_check_ds(const DSWeight& weight, int level) {
    if (level < 2) throw Error(Errc::invalid_argument, "intertwine_check_ds needs level >= 2");
    const DSGenerators gens = build_ds_generators(weight, level);
    const Basis& basis = gens.basis;
    const GenName names[] = {GenName::A, GenName::ADag, GenName::K0, GenName::KPlus,
                             GenName::KMinus};
    const TruncatedOperator* mats[] = {&gens.a, &gens.a_dag, &gens.K0, &gens.K_plus,
                                       &gens.K_minus};
    double dev = 0.0;
    for (int g = 0; g < 5; ++g) {
        for (int col = 0; col < basis.dim(); ++col) {
            const DsLabel lbl = basis.ds_label(col);
            BivarPoly image = sigma_k_apply(weight, names[g], ds_poly(weight, lbl.n_prime, lbl.n));
            // Read each monomial off against the normalized basis polynomial.
            for (const auto& [key, c] : image.terms()) {
                const int row = basis.ds_index(key.first, key.second);
                if (row < 0) continue;  // image of a top-grade state sticks out
                const double norm = ds_poly(weight, key.first, key.second).coeff(key.first, key.second).real();
                dev = std::max(dev, std::abs(mats[g]->mat(row, col) - c / norm));
            }
            // And ensure the matrix has no entries the polynomial lacks.
            for (int row = 0; row < basis.dim(); ++row) {
                const DsLabel r = basis.ds_label(row);
                if (image.coeff(r.n_prime, r.n) == 0.0)
                    dev = std::max(dev, std::abs(mats[g]->mat(row, col)));
            }
        }
    }
    return dev;
}

} // namespace jacobi
