#include "jacobi/group_core.hpp"

#include <cmath>

#include "jacobi/errors.hpp"

namespace jacobi {

Mat4 Mat4::identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Mat4 operator*(double s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = s * a(i, j);
    return r;
}

Mat4 bracket(const Mat4& a, const Mat4& b) { return a * b - b * a; }

double max_abs_diff(const Mat4& a, const Mat4& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

double max_abs(const Mat4& a) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

Mat4 embed(const GroupElement& g) {
    if (std::abs(g.M.det() - 1.0) > 1e-12)
        throw Error(Errc::domain_error, "group element needs det M = 1");
    const double a = g.M.a, b = g.M.b, c = g.M.c, d = g.M.d;
    Mat4 r;
    r(0, 0) = a;        r(0, 2) = b;        r(0, 3) = a * g.mu_H - b * g.lambda;
    r(1, 0) = g.lambda; r(1, 1) = 1.0;      r(1, 2) = g.mu_H;   r(1, 3) = g.kappa;
    r(2, 0) = c;        r(2, 2) = d;        r(2, 3) = c * g.mu_H - d * g.lambda;
    r(3, 3) = 1.0;
    return r;
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    const Mat4 prod = embed(g1) * embed(g2);
    GroupElement g;
    g.M = {prod(0, 0), prod(0, 2), prod(2, 0), prod(2, 2)};
    g.lambda = prod(1, 0);
    g.mu_H = prod(1, 2);
    g.kappa = prod(1, 3);
    // The product of two embedded elements must itself have the embedded shape.
    if (max_abs_diff(prod, embed(g)) > 1e-10)
        throw Error(Errc::domain_error, "product left the embedded group shape");
    return g;
}

namespace {

Mat4 basis_matrix(AlgebraGen x) {
    Mat4 r;
    switch (x) {
        case AlgebraGen::P: r(1, 0) = 1.0; r(2, 3) = -1.0; break;
        case AlgebraGen::Q: r(0, 3) = 1.0; r(1, 2) = 1.0; break;
        case AlgebraGen::R: r(1, 3) = 1.0; break;
        case AlgebraGen::F: r(0, 2) = 1.0; break;
        case AlgebraGen::G: r(2, 0) = 1.0; break;
        case AlgebraGen::H: r(0, 0) = 1.0; r(2, 2) = -1.0; break;
    }
    return r;
}

} // namespace

AlgebraElement algebra_element(const std::array<double, 6>& coeff) {
    AlgebraElement e;
    e.coeff = coeff;
    for (int i = 0; i < 6; ++i)
        e.matrix = e.matrix + coeff[i] * basis_matrix(static_cast<AlgebraGen>(i));
    return e;
}

std::array<AlgebraElement, 6> algebra_basis() {
    std::array<AlgebraElement, 6> basis;
    for (int i = 0; i < 6; ++i) {
        std::array<double, 6> c{};
        c[i] = 1.0;
        basis[i] = algebra_element(c);
    }
    return basis;
}

StructureReport check_structure_constants() {
    const auto basis = algebra_basis();
    const auto mat = [&](AlgebraGen x) { return basis[static_cast<int>(x)].matrix; };

    // [P,Q]=2R, [F,G]=H, [H,F]=2F, [G,H]=2G, [P,F]=Q, [Q,G]=P, [P,H]=P,
    // [H,Q]=Q; the remaining seven pairs vanish.
    struct Entry {
        AlgebraGen x, y;
        double scale;
        AlgebraGen target;
        bool zero;
    };
    using AG = AlgebraGen;
    const Entry table[] = {
        {AG::P, AG::Q, 2.0, AG::R, false},
        {AG::P, AG::R, 0.0, AG::R, true},
        {AG::P, AG::F, 1.0, AG::Q, false},
        {AG::P, AG::G, 0.0, AG::R, true},
        {AG::P, AG::H, 1.0, AG::P, false},
        {AG::Q, AG::R, 0.0, AG::R, true},
        {AG::Q, AG::F, 0.0, AG::R, true},
        {AG::Q, AG::G, 1.0, AG::P, false},
        {AG::Q, AG::H, -1.0, AG::Q, false},
        {AG::R, AG::F, 0.0, AG::R, true},
        {AG::R, AG::G, 0.0, AG::R, true},
        {AG::R, AG::H, 0.0, AG::R, true},
        {AG::F, AG::G, 1.0, AG::H, false},
        {AG::F, AG::H, -2.0, AG::F, false},
        {AG::G, AG::H, 2.0, AG::G, false},
    };

    StructureReport report{0.0, 0};
    for (const auto& e : table) {
        const Mat4 lhs = bracket(mat(e.x), mat(e.y));
        const Mat4 rhs = e.zero ? Mat4{} : e.scale * mat(e.target);
        report.max_deviation = std::max(report.max_deviation, max_abs_diff(lhs, rhs));
        ++report.pairs_checked;
    }
    return report;
}

JacobiActionResult jacobi_action(const GroupElement& g, const PointCH& p, double m, double k) {
    if (!(p.tau.imag() > 0.0)) throw Error(Errc::domain_error, "jacobi_action needs Im tau > 0");
    if (std::abs(g.M.det() - 1.0) > 1e-12)
        throw Error(Errc::domain_error, "group element needs det M = 1");

    const cplx denom = g.M.c * p.tau + g.M.d;
    const cplx z_g = (p.z + g.lambda * p.tau + g.mu_H) / denom;
    const cplx tau_g = (g.M.a * p.tau + g.M.b) / denom;
    const cplx theta = g.lambda * p.z + (g.lambda * z_g - g.M.c * z_g * z_g) * denom;

    const cplx two_pi_i(0.0, 2.0 * M_PI);
    const cplx factor = std::pow(denom, -k) * std::exp(two_pi_i * m * (g.kappa + theta));
    return {{z_g, tau_g}, factor};
}

} // namespace jacobi
